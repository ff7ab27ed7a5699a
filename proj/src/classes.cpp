#include "univalent/classes.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace univalent {

SchlichtFunction::SchlichtFunction(TaylorSeries series) : series_(std::move(series)), theta_(0.0) {
    if (series_.order() < 1) throw Error(ErrorKind::InsufficientOrder, "a schlicht function needs order >= 1");
    if (series_[0] != Complex{}) throw Error(ErrorKind::InvalidArgument, "f(0) must vanish");
    if (std::abs(std::abs(series_[1]) - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "|f'(0)| must equal 1");
    }
    theta_ = std::arg(series_[1]);
}

ExteriorFunction::ExteriorFunction(Complex leading_in, std::vector<Complex> b_in, bool exact_in)
    : leading(leading_in), b(std::move(b_in)), exact(exact_in) {
    if (std::abs(std::abs(leading) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "|leading| must equal 1");
    if (b.empty()) b.push_back(Complex{});
}

SchlichtFunction koebe(double theta, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "koebe needs order >= 1");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = static_cast<double>(k) * std::polar(1.0, -(k - 1) * theta);
    return SchlichtFunction(TaylorSeries(std::move(c)));
}

SchlichtFunction rotate(const SchlichtFunction& f, double alpha, double beta) {
    return SchlichtFunction(std::polar(1.0, beta) * rotate_argument(f.series(), alpha));
}

ExteriorFunction invert_to_sigma(const SchlichtFunction& f, int m) {
    if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative exterior order");
    if (f.order() < m + 2) {
        throw Error(ErrorKind::InsufficientOrder, "inverting to b_" + std::to_string(m) + " needs order >= " +
                                                      std::to_string(m + 2) + ", got " + std::to_string(f.order()));
    }
    const Complex a1 = f.series()[1];
    // f = a1 z g(z), g(0) = 1;  1/f(1/zeta) = (zeta / a1) / g(1/zeta)
    std::vector<Complex> g(static_cast<std::size_t>(m) + 2);
    for (int j = 0; j <= m + 1; ++j) g[static_cast<std::size_t>(j)] = f.series()[j + 1] / a1;
    const TaylorSeries h = reciprocal(TaylorSeries(std::move(g)));
    const Complex leading = 1.0 / a1;
    std::vector<Complex> b(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) b[static_cast<std::size_t>(k)] = leading * h[k + 1];
    return ExteriorFunction(leading, std::move(b));
}

SchlichtFunction invert_to_s(const ExteriorFunction& big_f, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "interior order must be >= 1");
    if (!big_f.exact && big_f.order() < n - 2) {
        throw Error(ErrorKind::InsufficientOrder, "order " + std::to_string(n) + " needs b_0..b_" +
                                                      std::to_string(n - 2) + ", got b_0..b_" +
                                                      std::to_string(big_f.order()));
    }
    const Complex ell = big_f.leading;
    // F(1/z) = (ell / z) H(z),  H = 1 + (b_0/ell) z + (b_1/ell) z^2 + ...
    std::vector<Complex> h(static_cast<std::size_t>(n), Complex{});
    h[0] = 1.0;
    for (int j = 1; j < n; ++j) {
        if (j - 1 <= big_f.order()) h[static_cast<std::size_t>(j)] = big_f.b[static_cast<std::size_t>(j - 1)] / ell;
    }
    const TaylorSeries r = reciprocal(TaylorSeries(std::move(h)));
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) a[static_cast<std::size_t>(k)] = r[k - 1] / ell;
    a[1] = 1.0 / ell;
    return SchlichtFunction(TaylorSeries(std::move(a)));
}

namespace {

// Monomial b0^i b1^j u^k (u = 1/leading) with an integer coefficient; only
// j <= 1 is tracked since the leading structure needs nothing more.
using Monomials = std::map<std::tuple<int, int, int>, long long>;

PhaseExponents compute_phase_exponents(int n) {
    // R = 1/H with H = 1 + u b0 z + u b1 z^2, R_m = -u b0 R_{m-1} - u b1 R_{m-2}
    std::vector<Monomials> r(static_cast<std::size_t>(n));
    r[0][{0, 0, 0}] = 1;
    for (int m = 1; m < n; ++m) {
        Monomials next;
        for (const auto& [key, coef] : r[static_cast<std::size_t>(m - 1)]) {
            const auto [i, j, k] = key;
            next[{i + 1, j, k + 1}] -= coef;
        }
        if (m >= 2) {
            for (const auto& [key, coef] : r[static_cast<std::size_t>(m - 2)]) {
                const auto [i, j, k] = key;
                if (j + 1 <= 1) next[{i, j + 1, k + 1}] -= coef;
            }
        }
        r[static_cast<std::size_t>(m)] = std::move(next);
    }
    // a_n = u R_{n-1}
    PhaseExponents out{0, 0, 0, 0};
    for (const auto& [key, coef] : r[static_cast<std::size_t>(n - 1)]) {
        const auto [i, j, k] = key;
        if (j == 0 && i == n - 1) {
            out.leading = k + 1;
            out.leading_coefficient = coef;
        } else if (j == 1 && i == n - 3) {
            out.subleading = k + 1;
            out.subleading_coefficient = coef;
        }
    }
    return out;
}

Complex ipow(Complex base, int e) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

PhaseExponents phase_exponents(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "leading structure needs n >= 3");
    static std::mutex mutex;
    static std::map<int, PhaseExponents> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_phase_exponents(n)).first;
    return it->second;
}

LeadingStructure exterior_leading_structure(const ExteriorFunction& big_f, int n) {
    const PhaseExponents ph = phase_exponents(n);
    const Complex u = 1.0 / big_f.leading;
    const Complex b0 = big_f.b.empty() ? Complex{} : big_f.b[0];
    const Complex b1 = big_f.b.size() > 1 ? big_f.b[1] : Complex{};
    const Complex predicted = static_cast<double>(ph.leading_coefficient) * ipow(u, ph.leading) * ipow(b0, n - 1) +
                              static_cast<double>(ph.subleading_coefficient) * ipow(u, ph.subleading) * b1 *
                                  ipow(b0, n - 3);
    const Complex actual = invert_to_s(big_f, n).a(n);
    return {predicted, actual};
}

}  // namespace univalent
