#include "disbet/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace disbet::kernels {

namespace {

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

void scale_add_scalar(double* acc, const double* x, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += c * x[i];
}

double vmax_scalar(const double* x, std::size_t n) {
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i) m = x[i] > m ? x[i] : m;
    return m;
}

double weighted_log_sum_scalar(const double* w, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 0.0) s += w[i] * std::log(x[i]);
    }
    return s;
}

double weighted_log_ratio_sum_scalar(const double* w, const double* num,
                                     const double* den, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 0.0) s += w[i] * (std::log(num[i]) - std::log(den[i]));
    }
    return s;
}

void renyi_exponents_scalar(const double* b, const double* m, double alpha,
                            double* t, std::size_t n) {
    const double beta = 1.0 - alpha;
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = alpha * std::log(b[i]) + beta * std::log(m[i]);
    }
}

double sum_exp_shifted_scalar(const double* t, double shift, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::exp(t[i] - shift);
    return s;
}

void pow_ratio_scalar(const double* num, const double* den, double p,
                      double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(num[i] / den[i], p);
}

void pow_scale_scalar(const double* x, double p, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(x[i], p);
}

constexpr Ops kScalarOps = {
    "scalar",
    sum_scalar,
    dot_scalar,
    scale_add_scalar,
    vmax_scalar,
    weighted_log_sum_scalar,
    weighted_log_ratio_sum_scalar,
    renyi_exponents_scalar,
    sum_exp_shifted_scalar,
    pow_ratio_scalar,
    pow_scale_scalar,
};

const Ops* pick_default() {
    if (const char* env = std::getenv("DISBET_KERNELS")) {
        std::string want(env);
        if (want == "scalar") return &kScalarOps;
        if (want == "avx2" && avx2() != nullptr) return avx2();
        // "auto" or anything unavailable: fall through
    }
    if (const Ops* v = avx2()) return v;
    return &kScalarOps;
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& scalar() { return kScalarOps; }

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (ops == nullptr) {
        ops = pick_default();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force(const std::string& name) {
    if (name == "scalar") {
        g_active.store(&kScalarOps, std::memory_order_release);
    } else if (name == "avx2") {
        const Ops* v = avx2();
        g_active.store(v != nullptr ? v : &kScalarOps, std::memory_order_release);
    } else if (name == "auto") {
        g_active.store(pick_default(), std::memory_order_release);
    } else {
        throw std::invalid_argument("unknown kernel set: " + name);
    }
}

std::vector<const Ops*> available() {
    std::vector<const Ops*> v{&kScalarOps};
    if (const Ops* a = avx2()) v.push_back(a);
    return v;
}

}  // namespace disbet::kernels
