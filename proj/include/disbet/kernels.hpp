#pragma once

// Inner-loop reductions and transforms over outcome arrays.
//
// Every kernel exists as a scalar reference implementation and, on x86-64
// hardware with AVX2+FMA, as a vectorized variant. The variant is picked once
// at startup (overridable via the DISBET_KERNELS environment variable or
// kernels::force()) and stays fixed for the lifetime of the process, so
// results are reproducible run to run on the same machine.
//
// Zero-weight convention: weighted_log_sum and weighted_log_ratio_sum skip
// terms with w[i] == 0 entirely (the 0*ln 0 = 0 convention), so callers may
// pass distributions with zero mass entries.

#include <cstddef>
#include <string>
#include <vector>

namespace disbet::kernels {

struct Ops {
    const char* name;

    // sum(x) over n entries
    double (*sum)(const double* x, std::size_t n);
    // dot(x, y) = sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // acc[i] += c * x[i]
    void (*scale_add)(double* acc, const double* x, double c, std::size_t n);
    // max over n entries (n >= 1)
    double (*vmax)(const double* x, std::size_t n);
    // sum_i w[i]*ln(x[i]), terms with w[i] == 0 skipped
    double (*weighted_log_sum)(const double* w, const double* x, std::size_t n);
    // sum_i w[i]*(ln num[i] - ln den[i]), terms with w[i] == 0 skipped
    double (*weighted_log_ratio_sum)(const double* w, const double* num,
                                     const double* den, std::size_t n);
    // t[i] = alpha*ln(b[i]) + (1-alpha)*ln(m[i]); inputs strictly positive
    void (*renyi_exponents)(const double* b, const double* m, double alpha,
                            double* t, std::size_t n);
    // sum_i exp(t[i] - shift)
    double (*sum_exp_shifted)(const double* t, double shift, std::size_t n);
    // out[i] = (num[i]/den[i])^p; inputs strictly positive
    void (*pow_ratio)(const double* num, const double* den, double p,
                      double* out, std::size_t n);
    // out[i] = x[i]^p; x strictly positive
    void (*pow_scale)(const double* x, double p, double* out, std::size_t n);
};

// Scalar reference kernels; always present.
const Ops& scalar();

// AVX2+FMA kernels, or nullptr when the binary or CPU lacks support.
const Ops* avx2();

// The active table. Defaults to the best available set, or to the set named
// by DISBET_KERNELS ("scalar", "avx2", "auto") when that variable is set.
// Requesting an unavailable set falls back to scalar.
const Ops& active();

// Override the active table ("scalar", "avx2", "auto"). Intended for tests
// and the CLI; throws std::invalid_argument on unknown names.
void force(const std::string& name);

// All kernel tables usable on this machine, scalar first.
std::vector<const Ops*> available();

}  // namespace disbet::kernels
