#include "unimod/families.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace unimod {

namespace {

std::string power_name(const std::string& base, unsigned e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string monomial_name(const std::string& x, unsigned r, const std::string& g, unsigned s) {
    std::string name = power_name(x, r) + power_name(g, s);
    return name.empty() ? "1" : name;
}

}  // namespace

HopfPtr taft(unsigned n) {
    if (n <= 1) throw std::invalid_argument("Taft algebra needs N > 1");
    static std::mutex mu;
    static std::map<unsigned, HopfPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::size_t dim = static_cast<std::size_t>(n) * n;
    Scalar omega = Scalar::zeta(n);
    auto idx = [n](unsigned r, unsigned s) { return static_cast<std::size_t>(r) * n + s; };

    std::vector<std::string> names(dim);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s) names[idx(r, s)] = monomial_name("x", r, "g", s);

    Vector unit(dim, n);
    unit[idx(0, 0)] = Scalar::one(n);
    StructureAlgebra alg(n, names, unit);
    // (x^r g^s)(x^u g^v) = omega^(s u) x^(r+u) g^(s+v), zero once x-degree
    // reaches N
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s)
            for (unsigned u = 0; u < n; ++u)
                for (unsigned v = 0; v < n; ++v) {
                    if (r + u >= n) continue;
                    alg.set_c(idx(r, s), idx(u, v), idx(r + u, (s + v) % n),
                              omega.pow(static_cast<long>(s) * u));
                }

    alg.finalize();
    Vector xgen = Vector::unit(dim, idx(1, 0), n);
    Vector ggen = Vector::unit(dim, idx(0, 1), n);

    // Delta extends multiplicatively from Delta(x) = x (x) 1 + g (x) x and
    // Delta(g) = g (x) g
    Vector dx(dim * dim, n), dg(dim * dim, n);
    dx[idx(1, 0) * dim + idx(0, 0)] = Scalar::one(n);
    dx[idx(0, 1) * dim + idx(1, 0)] = Scalar::one(n);
    dg[idx(0, 1) * dim + idx(0, 1)] = Scalar::one(n);
    Matrix comult(dim * dim, dim, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s) {
            Vector acc = unit.tensor(unit);
            for (unsigned i = 0; i < r; ++i) acc = tensor_multiply(alg, alg, acc, dx);
            for (unsigned i = 0; i < s; ++i) acc = tensor_multiply(alg, alg, acc, dg);
            comult.set_col(idx(r, s), acc);
        }

    Vector counit(dim, n);
    for (unsigned s = 0; s < n; ++s) counit[idx(0, s)] = Scalar::one(n);

    // S(g) = g^-1, S(x) = -g^-1 x, extended antimultiplicatively:
    // S(x^r g^s) = S(g)^s S(x)^r
    Vector sx = -alg.multiply(alg.power(ggen, n - 1), xgen);
    Vector sg = alg.power(ggen, n - 1);
    Matrix antipode(dim, dim, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s)
            antipode.set_col(idx(r, s), alg.multiply(alg.power(sg, s), alg.power(sx, r)));

    auto built = std::make_shared<HopfData>(
        HopfPresentation{std::move(alg), std::move(comult), std::move(counit),
                         std::move(antipode)});
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(built)).first->second;
}

HopfPtr group_algebra(const std::vector<std::vector<unsigned>>& cayley,
                      std::vector<std::string> names) {
    std::size_t n = cayley.size();
    if (n == 0) throw std::invalid_argument("empty Cayley table");
    for (const auto& row : cayley) {
        if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
        for (unsigned v : row)
            if (v >= n) throw std::invalid_argument("Cayley table entry out of range");
    }
    // identity
    std::size_t e = n;
    for (std::size_t i = 0; i < n; ++i) {
        bool ident = true;
        for (std::size_t j = 0; j < n; ++j)
            if (cayley[i][j] != j || cayley[j][i] != j) {
                ident = false;
                break;
            }
        if (ident) {
            e = i;
            break;
        }
    }
    if (e == n) throw std::invalid_argument("Cayley table has no identity element");
    // associativity and inverses
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]]) {
                    std::ostringstream os;
                    os << "Cayley table not associative at (" << i << "," << j << "," << k << ")";
                    throw std::invalid_argument(os.str());
                }
    std::vector<std::size_t> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (cayley[i][j] == e && cayley[j][i] == e) inv[i] = j;
        if (inv[i] == n)
            throw std::invalid_argument("Cayley table element " + std::to_string(i) +
                                        " has no inverse");
    }

    if (names.empty()) {
        names.resize(n);
        for (std::size_t i = 0; i < n; ++i) names[i] = i == e ? "e" : "u" + std::to_string(i);
    }
    Vector unit(n);
    unit[e] = Scalar(1);
    StructureAlgebra alg(1, names, unit);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) alg.set_c(i, j, cayley[i][j], Scalar(1));

    Matrix comult(n * n, n);
    Vector counit(n);
    Matrix antipode(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        comult.at(i * n + i, i) = Scalar(1);
        counit[i] = Scalar(1);
        antipode.at(inv[i], i) = Scalar(1);
    }
    auto h = std::make_shared<HopfData>(
        HopfPresentation{std::move(alg), std::move(comult), std::move(counit),
                         std::move(antipode)});
    if (!h->unimodular() || !h->dual_unimodular())
        throw InternalConsistencyError("group algebra must be unimodular on both sides");
    return h;
}

std::vector<std::vector<unsigned>> cyclic_cayley(unsigned n) {
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<unsigned>> product_cayley(const std::vector<std::vector<unsigned>>& a,
                                                  const std::vector<std::vector<unsigned>>& b) {
    std::size_t na = a.size(), nb = b.size();
    std::vector<std::vector<unsigned>> t(na * nb, std::vector<unsigned>(na * nb));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    t[i * nb + j][k * nb + l] = a[i][k] * nb + b[j][l];
    return t;
}

std::vector<std::vector<unsigned>> s3_cayley() {
    // permutations of {0,1,2} as (image of 0, image of 1, image of 2)
    const unsigned perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto compose = [&](unsigned p, unsigned q) {
        unsigned img[3];
        for (unsigned i = 0; i < 3; ++i) img[i] = perms[p][perms[q][i]];
        for (unsigned r = 0; r < 6; ++r)
            if (perms[r][0] == img[0] && perms[r][1] == img[1] && perms[r][2] == img[2]) return r;
        throw InternalConsistencyError("permutation composition fell outside S3");
    };
    std::vector<std::vector<unsigned>> t(6, std::vector<unsigned>(6));
    for (unsigned i = 0; i < 6; ++i)
        for (unsigned j = 0; j < 6; ++j) t[i][j] = compose(i, j);
    return t;
}

ComoduleAlgebra a0(unsigned n, unsigned d) { return a0(taft(n), d); }

ComoduleAlgebra a0(HopfPtr taft_n, unsigned d) {
    unsigned n = static_cast<unsigned>(taft_n->order());
    if (d == 0 || n % d != 0) throw std::invalid_argument("A0(d) needs d | N");
    unsigned m = n / d;
    std::size_t hdim = taft_n->dim();

    std::vector<std::string> names(d);
    for (unsigned s = 0; s < d; ++s) names[s] = monomial_name("", 0, "G", s);
    Vector unit(d, n);
    unit[0] = Scalar::one(n);
    StructureAlgebra alg(n, names, unit);
    for (unsigned s = 0; s < d; ++s)
        for (unsigned v = 0; v < d; ++v) alg.set_c(s, v, (s + v) % d, Scalar::one(n));

    // delta(G^s) = g^(m s) (x) G^s; g^k sits at PBW index k
    Matrix coaction(hdim * d, d, n);
    for (unsigned s = 0; s < d; ++s) {
        std::size_t gpow = (static_cast<std::size_t>(m) * s) % n;
        coaction.at(gpow * d + s, s) = Scalar::one(n);
    }

    Vector lambda(d, n);
    lambda[0] = Scalar::one(n);
    return ComoduleAlgebra(std::move(taft_n), {std::move(alg), std::move(coaction)},
                           {{"grouplike", lambda}},
                           {Vector::unit(hdim, 0, n)});  // candidate g_A = 1
}

ComoduleAlgebra a1(unsigned n, unsigned d, const Scalar& xi) { return a1(taft(n), d, xi); }

ComoduleAlgebra a1(HopfPtr taft_n, unsigned d, const Scalar& xi) {
    unsigned n = static_cast<unsigned>(taft_n->order());
    if (d == 0 || n % d != 0) throw std::invalid_argument("A1(d, xi) needs d | N");
    unsigned m = n / d;
    std::size_t hdim = taft_n->dim();
    Scalar omega_m = Scalar::zeta(n).pow(m);
    Scalar xi_n = xi.lifted(n);

    // basis X^r G^s, r = 0..N-1, s = 0..d-1, index r*d + s
    std::size_t dim = static_cast<std::size_t>(n) * d;
    auto idx = [d](unsigned r, unsigned s) { return static_cast<std::size_t>(r) * d + s; };
    std::vector<std::string> names(dim);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < d; ++s) names[idx(r, s)] = monomial_name("X", r, "G", s);
    Vector unit(dim, n);
    unit[idx(0, 0)] = Scalar::one(n);
    StructureAlgebra alg(n, names, unit);
    // (X^r G^s)(X^u G^v) = omega^(m s u) X^(r+u) G^(s+v), X^N = xi
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < d; ++s)
            for (unsigned u = 0; u < n; ++u)
                for (unsigned v = 0; v < d; ++v) {
                    Scalar c = omega_m.pow(static_cast<long>(s) * u);
                    unsigned rx = r + u, sx = (s + v) % d;
                    if (rx >= n) {
                        c *= xi_n;
                        rx -= n;
                    }
                    alg.set_c(idx(r, s), idx(u, v), idx(rx, sx), c);
                }

    alg.finalize();

    // coaction from delta(X) = x (x) 1 + g (x) X and delta(G) = g^m (x) G
    const StructureAlgebra& h = taft_n->algebra();
    auto hidx = [n](unsigned r, unsigned s) { return static_cast<std::size_t>(r) * n + s; };
    Vector dX(hdim * dim, n), dG(hdim * dim, n);
    dX[hidx(1, 0) * dim + idx(0, 0)] = Scalar::one(n);
    dX[hidx(0, 1) * dim + idx(1, 0)] = Scalar::one(n);
    dG[hidx(0, m % n) * dim + idx(0, 1)] = Scalar::one(n);
    Matrix coaction(hdim * dim, dim, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < d; ++s) {
            Vector acc = h.unit().tensor(unit);
            for (unsigned i = 0; i < r; ++i) acc = tensor_multiply(h, alg, acc, dX);
            for (unsigned i = 0; i < s; ++i) acc = tensor_multiply(h, alg, acc, dG);
            coaction.set_col(idx(r, s), acc);
        }

    Vector lambda(dim, n);
    lambda[idx(n - 1, 0)] = Scalar::one(n);
    Vector g_inv(hdim, n);
    g_inv[hidx(0, n - 1)] = Scalar::one(n);  // candidate g_A = g^-1
    return ComoduleAlgebra(std::move(taft_n), {std::move(alg), std::move(coaction)},
                           {{"grouplike", lambda}}, {g_inv});
}

ComoduleAlgebra trivial_comodule(HopfPtr hopf) {
    unsigned ord = hopf->order();
    std::size_t hdim = hopf->dim();
    Vector unit(1, ord);
    unit[0] = Scalar::one(ord);
    StructureAlgebra alg(ord, {"1"}, unit);
    alg.set_c(0, 0, 0, Scalar::one(ord));
    Matrix coaction(hdim, 1, ord);
    coaction.set_col(0, hopf->algebra().unit());
    Vector lambda(1, ord);
    lambda[0] = Scalar::one(ord);
    Vector g_unit = hopf->algebra().unit();
    return ComoduleAlgebra(std::move(hopf), {std::move(alg), std::move(coaction)},
                           {{"grouplike", lambda}}, {g_unit});
}

ComoduleAlgebra regular_comodule(HopfPtr hopf) {
    StructureAlgebra alg = hopf->algebra();
    Matrix coaction = hopf->comult();
    Vector lambda = hopf->cointegral();
    Vector g = hopf->grouplike();
    return ComoduleAlgebra(std::move(hopf), {std::move(alg), std::move(coaction)},
                           {{"grouplike", lambda}}, {g});
}

}  // namespace unimod
