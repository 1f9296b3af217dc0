#include "gwalk/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gwalk {

namespace reference {

std::vector<Polynomial> normal_forms(std::span<const Polynomial> fs, std::span<const MarkedPolynomial> G,
                                     const ReduceOptions& opts, std::size_t* steps) {
    std::vector<Polynomial> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(normal_form(f, G, opts, steps));
    return out;
}

}  // namespace reference

std::vector<Polynomial> normal_forms(std::span<const Polynomial> fs, std::span<const MarkedPolynomial> G,
                                     const ReduceOptions& opts, Execution exec, std::size_t* steps) {
    if (exec == Execution::Serial || fs.size() < 2) return reference::normal_forms(fs, G, opts, steps);

    const auto count = static_cast<std::ptrdiff_t>(fs.size());
    std::vector<Polynomial> out(fs.size());
    std::vector<std::exception_ptr> errors(fs.size());
    std::size_t total = 0;

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        std::size_t local = 0;
        try {
            out[i] = normal_form(fs[i], G, opts, &local);
        } catch (...) {
            errors[i] = std::current_exception();
        }
        total += local;
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    if (steps) *steps += total;
    return out;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace gwalk
