#include "hypaut/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace hypaut {

IntPolynomial IntPolynomial::from_coefficients(std::vector<Integer> c) {
    IntPolynomial p{std::move(c)};
    p.normalize();
    return p;
}

void IntPolynomial::normalize() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coefficients.size(), b.coefficients.size()));
    for (size_t i = 0; i < a.coefficients.size(); ++i) c[i] += a.coefficients[i];
    for (size_t i = 0; i < b.coefficients.size(); ++i) c[i] += b.coefficients[i];
    return IntPolynomial::from_coefficients(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coefficients.size(), b.coefficients.size()));
    for (size_t i = 0; i < a.coefficients.size(); ++i) c[i] += a.coefficients[i];
    for (size_t i = 0; i < b.coefficients.size(); ++i) c[i] -= b.coefficients[i];
    return IntPolynomial::from_coefficients(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<Integer> c(a.coefficients.size() + b.coefficients.size() - 1);
    for (size_t i = 0; i < a.coefficients.size(); ++i) {
        if (a.coefficients[i] == 0) continue;
        for (size_t j = 0; j < b.coefficients.size(); ++j)
            c[i + j] += a.coefficients[i] * b.coefficients[j];
    }
    return IntPolynomial::from_coefficients(std::move(c));
}

IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("poly_div_exact: division by zero polynomial");
    if (num.is_zero()) return IntPolynomial::zero();
    if (num.degree() < den.degree())
        throw inconsistency_error("poly_div_exact: nonzero remainder (degree too small)");

    std::vector<Integer> rem = num.coefficients;
    const Integer& lead = den.coefficients.back();
    std::vector<Integer> quot(num.degree() - den.degree() + 1);
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Integer top = rem[k + den.degree()];
        if (top == 0) continue;
        if (top % lead != 0)
            throw inconsistency_error("poly_div_exact: non-integral quotient coefficient");
        Integer q = top / lead;
        quot[k] = q;
        for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= q * den.coefficients[i];
    }
    for (const Integer& c : rem)
        if (c != 0) throw inconsistency_error("poly_div_exact: nonzero remainder");
    return IntPolynomial::from_coefficients(std::move(quot));
}

IntPolynomial power_minus_one(unsigned m) {
    std::vector<Integer> c(m + 1);
    c[0] = -1;
    c[m] = 1;
    return IntPolynomial{std::move(c)};
}

namespace {

unsigned totient_u(unsigned m) {
    unsigned phi = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        phi -= phi / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

IntPolynomial cyclotomic_uncached(unsigned m) {
    // Phi_m = (t^m - 1) / prod over proper divisors r of m of Phi_r.
    IntPolynomial den{{Integer(1)}};
    for (unsigned r = 1; r < m; ++r)
        if (m % r == 0) den = poly_mul(den, cyclotomic_poly(r));
    return poly_div_exact(power_minus_one(m), den);
}

}  // namespace

IntPolynomial cyclotomic_poly(unsigned m) {
    if (m < 1) throw std::domain_error("cyclotomic_poly: m must be >= 1");
    if (totient_u(m) > kMaxCyclotomicDegree)
        throw resource_error("cyclotomic_poly: totient(m) exceeds degree cap " +
                             std::to_string(kMaxCyclotomicDegree));
    static std::mutex mutex;
    static std::map<unsigned, IntPolynomial> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
    }
    IntPolynomial result = cyclotomic_uncached(m);
    {
        std::lock_guard<std::mutex> lock(mutex);
        memo.emplace(m, result);
    }
    return result;
}

Integer eval_int(const IntPolynomial& p, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

bool prime_power_identity_check(unsigned q, unsigned r) {
    if (r < 1) throw std::domain_error("prime_power_identity_check: r must be >= 1");
    if (!is_prime(Integer(q)).prime)
        throw std::domain_error("prime_power_identity_check: q must be prime");
    unsigned qr = 1, inner = 1;
    for (unsigned i = 0; i < r; ++i) qr *= q;
    for (unsigned i = 0; i + 1 < r; ++i) inner *= q;

    IntPolynomial lhs = cyclotomic_poly(qr);
    // Phi_q(t^{q^{r-1}}): spread the coefficients at stride q^{r-1}.
    IntPolynomial phi_q = cyclotomic_poly(q);
    std::vector<Integer> c(static_cast<size_t>(phi_q.degree()) * inner + 1);
    for (size_t i = 0; i < phi_q.coefficients.size(); ++i) c[i * inner] = phi_q.coefficients[i];
    return lhs == IntPolynomial::from_coefficients(std::move(c));
}

}  // namespace hypaut
