#include "so4sym/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace so4sym {

namespace {

// ---- integer polynomial helpers (dense, lowest degree first) ----

using ZPoly = std::vector<BigInt>;

int zdeg(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// exact division, remainder must vanish (used only on x^N-1 / Phi products)
ZPoly zdiv_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly r = num;
    int dn = zdeg(r), dd = zdeg(den);
    if (dd < 0) throw std::invalid_argument("zdiv_exact: division by zero poly");
    ZPoly q(dn - dd + 1, BigInt(0));
    while ((dn = zdeg(r)) >= dd) {
        // cyclotomic divisors are monic, so the leading quotient is exact
        BigInt c = r[dn] / den[dd];
        if (c * den[dd] != r[dn]) throw std::logic_error("zdiv_exact: not divisible");
        q[dn - dd] = c;
        for (int i = 0; i <= dd; ++i) r[dn - dd + i] -= c * den[i];
    }
    if (zdeg(r) >= 0) throw std::logic_error("zdiv_exact: nonzero remainder");
    return q;
}

const ZPoly& cyclotomic_poly(int n, std::map<int, ZPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d | n
    ZPoly f(n + 1, BigInt(0));
    f[0] = -1;
    f[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = zdiv_exact(f, cyclotomic_poly(d, memo));
    return memo.emplace(n, std::move(f)).first->second;
}

// ---- rational polynomial helpers for the extended gcd mod Phi_N ----

using QPoly = std::vector<Rational>;

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& c, int shift) {
    if (static_cast<int>(a.size()) < static_cast<int>(b.size()) + shift)
        a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    return a;
}

// (quotient, remainder) of a / b
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    int db = qdeg(b);
    if (db < 0) throw std::invalid_argument("qdivmod: zero divisor");
    QPoly q(std::max<int>(qdeg(a) - db + 1, 1), Rational(0));
    int da;
    while ((da = qdeg(a)) >= db) {
        Rational c = a[da] / b[db];
        q[da - db] += c;
        a = qsub_scaled(std::move(a), b, c, da - db);
    }
    return {q, a};
}

QPoly qmul_poly(const QPoly& a, const QPoly& b) {
    int da = qdeg(a), db = qdeg(b);
    if (da < 0 || db < 0) return {Rational(0)};
    QPoly r(da + db + 1, Rational(0));
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

// ---- CycloField ----

const CycloField& CycloField::get(int order) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it == registry.end())
        it = registry.emplace(order, std::unique_ptr<CycloField>(new CycloField(order))).first;
    return *it->second;
}

CycloField::CycloField(int order) : order_(order) {
    if (order <= 0 || order % 4 != 0)
        throw std::invalid_argument(
            "CycloField: order must be a positive multiple of 4 (got " +
            std::to_string(order) + "); the imaginary unit zeta^(N/4) must exist in-field");

    static std::mutex mu;
    static std::map<int, ZPoly> memo;
    ZPoly phi;
    {
        std::lock_guard<std::mutex> lock(mu);
        phi = cyclotomic_poly(order, memo);
    }
    degree_ = zdeg(phi);
    phi_.assign(phi.begin(), phi.begin() + degree_ + 1);

    // zeta^t for t = 0..N-1, computed by shift-and-reduce; Phi_N is monic
    powers_.reserve(order_);
    for (int t = 0; t < order_; ++t) {
        if (t < degree_) {
            std::vector<Rational> row(degree_, Rational(0));
            row[t] = 1;
            powers_.push_back(std::move(row));
            continue;
        }
        const std::vector<Rational>& prev = powers_[t - 1];
        std::vector<Rational> row(degree_, Rational(0));
        for (int k = 1; k < degree_; ++k) row[k] = prev[k - 1];
        Rational top = prev[degree_ - 1];
        if (top != 0)
            for (int k = 0; k < degree_; ++k) row[k] -= top * Rational(phi_[k]);
        powers_.push_back(std::move(row));
    }
}

const std::vector<Rational>& CycloField::power_row(long t) const {
    long m = t % order_;
    if (m < 0) m += order_;
    return powers_[static_cast<size_t>(m)];
}

// ---- CycloNumber ----

namespace {
void require_same_field(const CycloNumber& a, const CycloNumber& b) {
    if (!a.valid() || !b.valid())
        throw std::invalid_argument("CycloNumber: uninitialized operand");
    if (a.order() != b.order())
        throw std::invalid_argument(
            "CycloNumber: order mismatch (" + std::to_string(a.order()) + " vs " +
            std::to_string(b.order()) + "); embed into a common order first");
}
}  // namespace

CycloNumber CycloNumber::zero(int order) {
    const CycloField& f = CycloField::get(order);
    return CycloNumber(&f, std::vector<Rational>(f.degree(), Rational(0)));
}

CycloNumber CycloNumber::one(int order) {
    return from_rational(order, Rational(1));
}

CycloNumber CycloNumber::from_rational(int order, const Rational& q) {
    CycloNumber r = zero(order);
    r.coeffs_[0] = q;
    return r;
}

CycloNumber CycloNumber::root_power(int order, long k) {
    const CycloField& f = CycloField::get(order);
    return CycloNumber(&f, f.power_row(k));
}

CycloNumber CycloNumber::imaginary_unit(int order) {
    return root_power(order, CycloField::get(order).imaginary_power());
}

int CycloNumber::order() const {
    if (!field_) throw std::logic_error("CycloNumber: uninitialized");
    return field_->order();
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CycloNumber(field_, std::move(c));
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return CycloNumber(field_, std::move(c));
}

CycloNumber CycloNumber::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return CycloNumber(field_, std::move(c));
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    require_same_field(*this, o);
    const int deg = field_->degree();
    std::vector<Rational> acc(deg, Rational(0));
    // group data is sparse in the power basis; skip zero coefficients
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (o.coeffs_[j] == 0) continue;
            Rational c = coeffs_[i] * o.coeffs_[j];
            int t = i + j;
            if (t < deg) {
                acc[t] += c;
            } else {
                const std::vector<Rational>& row = field_->power_row(t);
                for (int k = 0; k < deg; ++k)
                    if (row[k] != 0) acc[k] += c * row[k];
            }
        }
    }
    return CycloNumber(field_, std::move(acc));
}

CycloNumber CycloNumber::operator*(const Rational& q) const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= q;
    return CycloNumber(field_, std::move(c));
}

CycloNumber CycloNumber::inverse() const {
    if (!valid()) throw std::logic_error("CycloNumber: uninitialized");
    if (is_zero()) throw std::invalid_argument("CycloNumber: division by zero");
    // extended Euclid for u*a + v*Phi = gcd; Phi_N irreducible over Q, so
    // gcd is a nonzero constant and u/gcd is the inverse
    const int deg = field_->degree();
    QPoly r0(coeffs_.begin(), coeffs_.end());
    QPoly r1(deg + 1, Rational(0));
    {
        // Phi coefficients via the zeta^deg row: zeta^deg = -sum phi_k zeta^k
        const std::vector<Rational>& row = field_->power_row(deg);
        for (int k = 0; k < deg; ++k) r1[k] = -row[k];
        r1[deg] = 1;
    }
    QPoly u0{Rational(1)}, u1{Rational(0)};
    while (qdeg(r1) >= 0) {
        auto [q, rem] = qdivmod(r0, r1);
        QPoly u2 = qsub_scaled(u0, qmul_poly(q, u1), Rational(1), 0);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    int d0 = qdeg(r0);
    if (d0 != 0) throw std::logic_error("CycloNumber: gcd with Phi_N not constant");
    Rational g = r0[0];
    std::vector<Rational> res(deg, Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) {
        if (u0[i] == 0) continue;
        const std::vector<Rational>& row = field_->power_row(static_cast<long>(i));
        for (int k = 0; k < deg; ++k)
            if (row[k] != 0) res[k] += (u0[i] / g) * row[k];
    }
    return CycloNumber(field_, std::move(res));
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const {
    require_same_field(*this, o);
    return *this * o.inverse();
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    if (field_ != o.field_) {
        if (!field_ || !o.field_ || order() != o.order()) return false;
    }
    return coeffs_ == o.coeffs_;
}

CycloNumber CycloNumber::conjugate() const {
    if (!valid()) throw std::logic_error("CycloNumber: uninitialized");
    const int deg = field_->degree();
    const int n = field_->order();
    std::vector<Rational> res(deg, Rational(0));
    for (int k = 0; k < deg; ++k) {
        if (coeffs_[k] == 0) continue;
        const std::vector<Rational>& row = field_->power_row((n - k) % n);
        for (int t = 0; t < deg; ++t)
            if (row[t] != 0) res[t] += coeffs_[k] * row[t];
    }
    return CycloNumber(field_, std::move(res));
}

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_real() const { return conjugate() == *this; }

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rational> CycloNumber::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CycloNumber CycloNumber::embed(int larger_order) const {
    if (!valid()) throw std::logic_error("CycloNumber: uninitialized");
    const int n = order();
    if (larger_order == n) return *this;
    if (larger_order % n != 0)
        throw std::invalid_argument("CycloNumber::embed: target order not a multiple");
    const CycloField& f2 = CycloField::get(larger_order);
    const long s = larger_order / n;
    std::vector<Rational> res(f2.degree(), Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const std::vector<Rational>& row = f2.power_row(static_cast<long>(k) * s);
        for (int t = 0; t < f2.degree(); ++t)
            if (row[t] != 0) res[t] += coeffs_[k] * row[t];
    }
    return CycloNumber(&f2, std::move(res));
}

ComplexInterval CycloNumber::numeric_eval(long precision_bits) const {
    if (!valid()) throw std::logic_error("CycloNumber: uninitialized");
    if (precision_bits < 53) precision_bits = 53;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 16);
    const int n = order();
    RealInterval two_pi = RealInterval::pi(prec) + RealInterval::pi(prec);
    ComplexInterval sum{RealInterval(prec), RealInterval(prec)};
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        RealInterval theta = two_pi.scaled(Rational(static_cast<long>(k), n), prec);
        RealInterval c = theta.cos_enclosure().scaled(coeffs_[k], prec);
        RealInterval s = theta.sin_enclosure().scaled(coeffs_[k], prec);
        sum = sum + ComplexInterval{std::move(c), std::move(s)};
    }
    return sum;
}

double CycloNumber::to_double() const {
    ComplexInterval v = numeric_eval();
    return v.re.midpoint();
}

int CycloNumber::sign_real() const {
    if (!is_real()) throw std::invalid_argument("sign_real: element is not real");
    if (is_zero()) return 0;
    for (long bits = 64;; bits *= 2) {
        int s = numeric_eval(bits).re.certain_sign();
        if (s != 0) return s;
        if (bits > (1L << 20))
            throw std::logic_error("sign_real: interval refinement failed to separate");
    }
}

int CycloNumber::lex_cmp(const CycloNumber& o) const {
    require_same_field(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = so4sym::lex_cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycloNumber::to_string() const {
    if (!valid()) return "<null>";
    std::ostringstream os;
    bool any = false;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (any) os << " + ";
        os << coeffs_[k];
        if (k > 0) os << "*z^" << k;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

CycloNumber root_power(int order, long k) { return CycloNumber::root_power(order, k); }
CycloNumber conjugate(const CycloNumber& a) { return a.conjugate(); }

int compare_real(const CycloNumber& a, const CycloNumber& b) {
    return (a - b).sign_real();
}

CycloNumber abs_real(const CycloNumber& a) {
    return a.sign_real() < 0 ? -a : a;
}

}  // namespace so4sym
