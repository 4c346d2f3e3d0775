#include "unimod/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace unimod {

namespace {

// Quotient of the exact division num / den in Q[x]; remainder must vanish.
std::vector<Rat> poly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    if (!num.empty()) throw InternalConsistencyError("cyclotomic polynomial division not exact");
    return q;
}

std::vector<Rat> cyclotomic_polynomial(unsigned n) {
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_table(d).modulus);
    }
    return num;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const CyclotomicTable& cyclotomic_table(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, CyclotomicTable> cache;  // node addresses are stable
    thread_local const CyclotomicTable* fast[64] = {};
    thread_local std::map<unsigned, const CyclotomicTable*> local;
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    if (order < 64 && fast[order]) return *fast[order];
    if (auto it = local.find(order); it != local.end()) {
        if (order < 64) fast[order] = it->second;
        return *it->second;
    }

    // materialize proper divisors first so the build below never re-enters
    // the lock through cyclotomic_polynomial
    for (unsigned d = 1; d < order; ++d)
        if (order % d == 0) cyclotomic_table(d);

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) {
        local.emplace(order, &it->second);
        if (order < 64) fast[order] = &it->second;
        return it->second;
    }

    CyclotomicTable t;
    t.order = order;
    if (order == 1) {
        t.degree = 1;
        t.modulus = {Rat(-1), Rat(1)};  // x - 1
    } else {
        t.modulus = cyclotomic_polynomial(order);
        t.degree = static_cast<unsigned>(t.modulus.size() - 1);
    }
    if (t.degree != euler_phi(order))
        throw InternalConsistencyError("cyclotomic degree mismatch");

    unsigned top = std::max(order - 1, 2 * t.degree > 1 ? 2 * t.degree - 2 : 0u);
    t.powers.resize(top + 1);
    for (unsigned k = 0; k <= top; ++k) {
        if (k < t.degree) {
            t.powers[k].assign(t.degree, Rat(0));
            t.powers[k][k] = 1;
        } else {
            // x^k = x * x^(k-1), reduced: shifting may spill into degree phi,
            // which folds back via the monic modulus.
            std::vector<Rat> v(t.degree + 1, Rat(0));
            for (unsigned i = 0; i < t.degree; ++i) v[i + 1] = t.powers[k - 1][i];
            Rat lead = v[t.degree];
            v.pop_back();
            if (lead != 0)
                for (unsigned i = 0; i < t.degree; ++i) v[i] -= lead * t.modulus[i];
            t.powers[k] = std::move(v);
        }
    }
    const CyclotomicTable& ref = cache.emplace(order, std::move(t)).first->second;
    local.emplace(order, &ref);
    if (order < 64) fast[order] = &ref;
    return ref;
}

Scalar::Scalar(const Rat& r, unsigned order) : order_(order) {
    const auto& t = cyclotomic_table(order);
    coeffs_.assign(t.degree, Rat(0));
    coeffs_[0] = r;
}

Scalar Scalar::zeta(unsigned order, long exponent) {
    const auto& t = cyclotomic_table(order);
    long e = exponent % static_cast<long>(order);
    if (e < 0) e += order;
    Scalar s = Scalar::zero(order);
    s.coeffs_ = t.powers[static_cast<unsigned>(e)];
    return s;
}

Scalar Scalar::from_terms(unsigned order, const std::vector<std::pair<long, Rat>>& terms) {
    Scalar s = Scalar::zero(order);
    for (const auto& [e, c] : terms) s += Scalar(c, order) * zeta(order, e);
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Scalar::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("scalar is not rational: " + str());
    return coeffs_[0];
}

Scalar Scalar::lifted(unsigned order) const {
    if (order == order_) return *this;
    if (order_ != 1) throw FieldMismatchError(order_, order);
    Scalar s = Scalar::zero(order);
    s.coeffs_[0] = coeffs_[0];
    return s;
}

unsigned Scalar::common_order(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return a.order_;
    if (a.order_ == 1) return b.order_;
    if (b.order_ == 1) return a.order_;
    throw FieldMismatchError(a.order_, b.order_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    unsigned n = common_order(*this, rhs);
    if (order_ != n) *this = lifted(n);
    if (rhs.order_ != n) return *this += rhs.lifted(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    unsigned n = common_order(*this, rhs);
    if (order_ != n) *this = lifted(n);
    if (rhs.order_ != n) return *this *= rhs.lifted(n);
    const auto& t = cyclotomic_table(n);
    unsigned deg = t.degree;
    std::vector<Rat> prod(2 * deg - 1, Rat(0));
    for (unsigned i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rat> out(deg, Rat(0));
    for (unsigned k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const auto& pk = t.powers[k];
        for (unsigned i = 0; i < deg; ++i)
            if (pk[i] != 0) out[i] += prod[k] * pk[i];
    }
    coeffs_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZeroError();
    if (is_rational()) {
        Scalar s = Scalar::zero(order_);
        s.coeffs_[0] = Rat(1) / coeffs_[0];
        return s;
    }
    // Extended Euclid in Q[x] against Phi_N: u*a + v*Phi = gcd = const.
    const auto& t = cyclotomic_table(order_);
    std::vector<Rat> r0 = t.modulus, r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
    auto deg_of = [](const std::vector<Rat>& p) { return p.empty() ? -1 : (int)p.size() - 1; };
    while (deg_of(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> q(std::max<int>(0, deg_of(r0) - deg_of(r1) + 1), Rat(0));
        std::vector<Rat> rem = r0;
        while (deg_of(rem) >= deg_of(r1)) {
            Rat c = rem.back() / r1.back();
            int shift = deg_of(rem) - deg_of(r1);
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        // u_next = u0 - q*u1
        std::vector<Rat> un(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (std::size_t i = 0; i < u0.size(); ++i) un[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < u1.size(); ++j) un[i + j] -= q[i] * u1[j];
        }
        while (!un.empty() && un.back() == 0) un.pop_back();
        u0 = std::move(u1);
        u1 = std::move(un);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    if (r1.empty()) throw InternalConsistencyError("non-unit in cyclotomic field");
    Rat g = r1[0];
    Scalar out = Scalar::zero(order_);
    for (std::size_t i = 0; i < u1.size() && i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = u1[i] / g;
    if (u1.size() > out.coeffs_.size())
        throw InternalConsistencyError("inverse exceeds field degree");
    return out;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = Scalar::one(order_), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (order_ == rhs.order_) return coeffs_ == rhs.coeffs_;
    unsigned n = common_order(*this, rhs);
    return lifted(n).coeffs_ == rhs.lifted(n).coeffs_;
}

std::vector<std::pair<unsigned, Rat>> Scalar::terms() const {
    std::vector<std::pair<unsigned, Rat>> out;
    for (unsigned i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(i, coeffs_[i]);
    return out;
}

std::string Scalar::str() const {
    auto ts = terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string coef = rational_str(a);
        if (e == 0) {
            os << coef;
        } else {
            if (coef != "1") os << coef << "*";
            os << "z";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

Rat parse_rational(const std::string& text) {
    auto bad = [&]() { return std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto check = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    };
    check(num);
    check(den);
    BigInt d(den);
    if (d == 0) throw bad();
    return Rat(BigInt(num), d);
}

std::string rational_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace unimod
