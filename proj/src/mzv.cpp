#include "ztk/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ztk/errors.hpp"
#include "ztk/zetavalues.hpp"

namespace ztk {

namespace {

// sup over y >= 1 of (1 + ln y)^c / sqrt(y); attained at 1 + ln y = 2c
double log_power_cap(unsigned long c)
{
    if (c == 0)
        return 1.0;
    double cd = static_cast<double>(c);
    return std::pow(2.0 * cd, cd) * std::exp(-(2.0 * cd - 1.0) / 2.0);
}

constexpr double kZeta2 = 1.6449340668482264;

// Tail of the nested sum over n_p > M.  The inner sum over n_1 < ... <
// n_(p-1) < n is at most zeta(2)^(p-1-c) (1+ln n)^c with c the number of
// exponent-1 entries before the last, and (1+ln n)^c <= (1+ln M)^c A(c)
// sqrt(n/M) for n > M, so
//   tail <= zeta(2)^(p-1-c) A(c) (1+ln M)^c M^(1-x_p) / (x_p - 3/2).
double absolute_tail_bound(const std::vector<unsigned long>& exponents, unsigned long M)
{
    unsigned long p = exponents.size();
    unsigned long c = 0;
    for (unsigned long i = 0; i + 1 < p; ++i)
        if (exponents[i] == 1)
            ++c;
    double xp = static_cast<double>(exponents.back());
    double lnM = std::log(static_cast<double>(M));
    return std::pow(kZeta2, static_cast<double>(p - 1 - c)) * log_power_cap(c) *
           std::pow(1.0 + lnM, static_cast<double>(c)) *
           std::pow(static_cast<double>(M), 1.0 - xp) / (xp - 1.5);
}

void validate_common(const MZVIndex& index, unsigned long M)
{
    if (index.exponents.empty())
        throw InvalidInput("index must be nonempty");
    for (unsigned long x : index.exponents)
        if (x == 0)
            throw InvalidInput("exponents must be positive");
    if (M < index.depth())
        throw InvalidInput("truncation bound must be at least the depth");
}

} // namespace

MZVIndex MZVIndex::untwisted(std::vector<unsigned long> exponents)
{
    return {std::move(exponents), {}, 1};
}

MZVIndex MZVIndex::twisted(std::vector<unsigned long> exponents,
                           std::vector<unsigned long> twists, unsigned long level)
{
    return {std::move(exponents), std::move(twists), level};
}

unsigned long MZVIndex::weight() const
{
    unsigned long w = 0;
    for (unsigned long x : exponents)
        w += x;
    return w;
}

MZVResult mzv(const MZVIndex& index, unsigned long M)
{
    validate_common(index, M);
    if (!index.twists.empty())
        throw InvalidInput("twisted index passed to the untwisted evaluator");
    if (index.exponents.back() < 2)
        throw DivergentIndex("last exponent must be >= 2");

    unsigned long p = index.depth();
    // acc[j] = sum over chains of length j ending at <= current n; the
    // update runs top-down so acc[j-1] still reflects n-1.
    std::vector<double> acc(p + 1, 0.0);
    acc[0] = 1.0;
    for (unsigned long n = 1; n <= M; ++n) {
        double nd = static_cast<double>(n);
        for (unsigned long j = p; j >= 1; --j) {
            if (acc[j - 1] == 0.0)
                continue;
            acc[j] += acc[j - 1] /
                      std::pow(nd, static_cast<double>(index.exponents[j - 1]));
        }
    }
    return {acc[p], absolute_tail_bound(index.exponents, M)};
}

CyclotomicMZVResult cyclotomic_mzv(const MZVIndex& index, unsigned long M)
{
    validate_common(index, M);
    if (index.level == 0)
        throw InvalidInput("level must be >= 1");
    std::vector<unsigned long> twists = index.twists;
    if (twists.empty())
        twists.assign(index.depth(), 0);
    if (twists.size() != index.depth())
        throw InvalidInput("twists must match the depth");

    bool all_trivial = true;
    for (unsigned long e : twists)
        if (e % index.level != 0)
            all_trivial = false;

    unsigned long p = index.depth();
    unsigned long xp = index.exponents.back();
    unsigned long ep = twists.back() % index.level;
    if (xp == 1 && ep == 0)
        throw DivergentIndex("(x_p, eps_p) = (1, 1) diverges");

    if (all_trivial) {
        // identical arithmetic to the untwisted sum
        MZVResult r = mzv(MZVIndex::untwisted(index.exponents), M);
        return {{r.value, 0.0}, r.error_bound};
    }

    unsigned long L = index.level;
    // eps_i^n depends only on n mod level; a table keeps the phases exact
    std::vector<std::vector<std::complex<double>>> phase(p);
    for (unsigned long i = 0; i < p; ++i) {
        phase[i].resize(L);
        for (unsigned long r = 0; r < L; ++r) {
            double ang = 2.0 * std::numbers::pi *
                         static_cast<double>((twists[i] % L) * r % L) / static_cast<double>(L);
            phase[i][r] = {std::cos(ang), std::sin(ang)};
        }
    }

    std::vector<std::complex<double>> acc(p + 1, 0.0);
    acc[0] = 1.0;
    for (unsigned long n = 1; n <= M; ++n) {
        double nd = static_cast<double>(n);
        unsigned long r = n % L;
        for (unsigned long j = p; j >= 1; --j) {
            acc[j] += acc[j - 1] * phase[j - 1][r] /
                      std::pow(nd, static_cast<double>(index.exponents[j - 1]));
        }
    }

    double bound;
    if (xp >= 2) {
        bound = absolute_tail_bound(index.exponents, M);
    } else {
        // Abel summation against the bounded partial sums of eps_p^n; the
        // variation of inner(n)/n contributes O((1+ln M)^c / M).
        double ang = 2.0 * std::numbers::pi * static_cast<double>(ep) /
                     static_cast<double>(L);
        double dist = std::abs(std::complex<double>(1.0, 0.0) -
                               std::complex<double>(std::cos(ang), std::sin(ang)));
        double G = 2.0 / dist;
        unsigned long c = 0;
        for (unsigned long i = 0; i + 1 < p; ++i)
            if (index.exponents[i] == 1)
                ++c;
        double Md = static_cast<double>(M);
        if (p == 1) {
            bound = 2.0 * G / (Md + 1.0);
        } else {
            double J = std::pow(kZeta2, static_cast<double>(p - 1 - c)) *
                       log_power_cap(c) *
                       std::pow(1.0 + std::log(Md), static_cast<double>(c));
            bound = 6.0 * G * J / Md;
        }
    }
    return {acc[p], bound};
}

bool stuffle_check(unsigned long a, unsigned long b, double tol)
{
    if (a < 2 || b < 2)
        throw InvalidInput("stuffle check needs a, b >= 2");
    if (tol <= 0)
        throw InvalidInput("tolerance must be positive");

    double part = tol / 10.0;
    auto truncation_for = [&](unsigned long last) {
        double C = kZeta2 / (static_cast<double>(last) - 1.5);
        double M = std::pow(C / part, 1.0 / (static_cast<double>(last) - 1.0));
        return std::max<unsigned long>(16, static_cast<unsigned long>(std::ceil(M)) + 1);
    };

    double za = zeta_numeric(a, part);
    double zb = zeta_numeric(b, part);
    double zab = zeta_numeric(a + b, part);
    double m_ab = mzv(MZVIndex::untwisted({a, b}), truncation_for(b)).value;
    double m_ba = mzv(MZVIndex::untwisted({b, a}), truncation_for(a)).value;
    return std::abs(za * zb - m_ab - m_ba - zab) < tol;
}

double zeta2_via_iterated_integral(double tol)
{
    if (tol <= 0)
        throw InvalidInput("tolerance must be positive");

    // Reduce the 2-form over 0 < t_2 < t_1 < 1 to int_0^1 -log(1-t)/t dt,
    // then substitute t = 1 - exp(-u): the integrand becomes u/(e^u - 1),
    // which is smooth, and the cut tail has the closed form
    //   int_L^inf u/(e^u-1) du = sum_k e^(-kL) (L/k + 1/k^2).
    const double delta = 1e-6;
    const double L = -std::log(delta);

    double tail = 0.0;
    double dk = delta;
    for (int k = 1; k <= 12; ++k) {
        tail += dk * (L / k + 1.0 / (static_cast<double>(k) * k));
        dk *= delta;
    }

    auto g = [](double u) { return u == 0.0 ? 1.0 : u / std::expm1(u); };

    auto simpson = [&](unsigned long n) {
        double h = L / static_cast<double>(n);
        double s = g(0.0) + g(L);
        for (unsigned long i = 1; i < n; ++i)
            s += g(h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
        return s * h / 3.0;
    };

    unsigned long n = 64;
    double prev = simpson(n);
    for (;;) {
        n *= 2;
        double cur = simpson(n);
        if (std::abs(cur - prev) <= tol / 2.0 || n >= (1ul << 24))
            return cur + tail;
        prev = cur;
    }
}

} // namespace ztk
