#include "unimod/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace unimod {

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
    MPoly p(nvars);
    p.add_term(std::vector<unsigned>(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    MPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Scalar(1));
    return p;
}

void MPoly::add_term(const std::vector<unsigned>& exp, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("mpoly variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("mpoly variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("mpoly variable count mismatch");
    MPoly out(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<unsigned> e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly operator*(const Scalar& c, const MPoly& p) {
    MPoly out(p.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : p.terms_) out.add_term(e, c * t);
    return out;
}

Scalar MPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("mpoly eval arity mismatch");
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

MPoly mpoly_determinant(const std::vector<std::vector<MPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty determinant");
    std::size_t nv = m[0][0].nvars();
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;

    // recursive expansion along the first remaining row
    struct Rec {
        const std::vector<std::vector<MPoly>>& m;
        std::size_t nv;
        MPoly run(std::size_t row, std::vector<std::size_t> cols) {
            if (cols.size() == 1) return m[row][cols[0]];
            MPoly acc(nv);
            bool neg = false;
            for (std::size_t j = 0; j < cols.size(); ++j, neg = !neg) {
                if (m[row][cols[j]].is_zero()) continue;
                std::vector<std::size_t> sub;
                sub.reserve(cols.size() - 1);
                for (std::size_t k = 0; k < cols.size(); ++k)
                    if (k != j) sub.push_back(cols[k]);
                MPoly minor = run(row + 1, std::move(sub));
                MPoly term = m[row][cols[j]] * minor;
                if (neg)
                    acc -= term;
                else
                    acc += term;
            }
            return acc;
        }
    } rec{m, nv};
    return rec.run(0, std::move(cols));
}

}  // namespace unimod
