#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwalk/polynomial.hpp"

namespace gwalk {

enum class Execution { Serial, Parallel };

/// Normal forms of every polynomial in `fs` modulo the same marked set `G`.
///
/// The inputs are independent, so the Parallel path distributes them over
/// OpenMP threads. Results are identical to the Serial path, entry by entry.
/// If any reduction throws, the exception from the lowest index is rethrown.
std::vector<Polynomial> normal_forms(std::span<const Polynomial> fs, std::span<const MarkedPolynomial> G,
                                     const ReduceOptions& opts, Execution exec = Execution::Parallel,
                                     std::size_t* steps = nullptr);

namespace reference {

/// Plain loop; kept as the oracle for the parallel kernel.
std::vector<Polynomial> normal_forms(std::span<const Polynomial> fs, std::span<const MarkedPolynomial> G,
                                     const ReduceOptions& opts, std::size_t* steps = nullptr);

}  // namespace reference

/// Threads the Parallel path will use (1 without OpenMP).
int max_threads();

}  // namespace gwalk
