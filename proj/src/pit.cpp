#include "unimod/pit.hpp"

#include <random>

namespace unimod {

namespace {

Matrix combine(const std::vector<Matrix>& gens, const Vector& t) {
    Matrix sum(gens[0].rows(), gens[0].cols());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (t[k].is_zero()) continue;
        sum += t[k] * gens[k];
    }
    return sum;
}

}  // namespace

PitCertificate invertible_in_subspace(const std::vector<Matrix>& gens, const PitOptions& opts) {
    PitCertificate cert;
    std::size_t d = gens.size();
    if (d == 0) {
        cert.kind = PitCertificate::Kind::certified_zero;
        cert.deterministic = true;
        return cert;
    }
    std::size_t n = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("subspace generators must be square and equisized");
    cert.degree_bound = static_cast<unsigned>(n);

    // deterministic grid if (n+1)^d fits the budget
    std::uint64_t points = 1;
    bool fits = true;
    for (std::size_t k = 0; k < d; ++k) {
        points *= (n + 1);
        if (points > opts.grid_budget) {
            fits = false;
            break;
        }
    }
    if (fits) {
        cert.deterministic = true;
        std::vector<std::size_t> idx(d, 0);
        while (true) {
            Vector t(d);
            for (std::size_t k = 0; k < d; ++k) t[k] = Scalar(static_cast<long>(idx[k]));
            ++cert.points_evaluated;
            if (!determinant(combine(gens, t)).is_zero()) {
                cert.kind = PitCertificate::Kind::witness;
                cert.witness = std::move(t);
                return cert;
            }
            std::size_t k = d;
            while (k > 0) {
                --k;
                if (++idx[k] <= n) break;
                idx[k] = 0;
                if (k == 0) {
                    cert.kind = PitCertificate::Kind::certified_zero;
                    return cert;
                }
            }
        }
    }

    // seeded sampling: failure probability per trial <= n / sample_bound
    cert.deterministic = false;
    cert.seed = opts.seed;
    cert.trials = opts.trials;
    cert.sample_bound = opts.sample_bound;
    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < opts.trials; ++trial) {
        Vector t(d);
        for (std::size_t k = 0; k < d; ++k)
            t[k] = Scalar(static_cast<long>(rng() % opts.sample_bound));
        ++cert.points_evaluated;
        if (!determinant(combine(gens, t)).is_zero()) {
            cert.kind = PitCertificate::Kind::witness;
            cert.witness = std::move(t);
            return cert;
        }
    }
    cert.kind = PitCertificate::Kind::probable_zero;
    return cert;
}

}  // namespace unimod
