// SPDX-License-Identifier: MIT

#include "agd/poisson_fd.hpp"

#include <random>
#include <stdexcept>

namespace agd {

namespace {

DiffPoly pd(const DiffPoly& p, FieldId x) { return partial(p, JetKey{x, 0, 0}); }

DiffPoly coord(FieldId x) { return DiffPoly::jet(x, 0, 0); }

// Random polynomial of degree <= 2 in the coordinates with coefficients in
// [-3, 3].
DiffPoly random_function(std::mt19937_64& rng, const std::vector<FieldId>& xs) {
    std::uniform_int_distribution<int> c(-3, 3);
    DiffPoly f = DiffPoly::constant(Rat(c(rng)));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        f += coord(xs[i]).scaled(Rat(c(rng)));
        for (std::size_t j = i; j < xs.size(); ++j)
            f += (coord(xs[i]) * coord(xs[j])).scaled(Rat(c(rng)));
    }
    return f;
}

CotangentSection random_section(std::mt19937_64& rng, const std::vector<FieldId>& xs) {
    CotangentSection s;
    for (std::size_t i = 0; i < xs.size(); ++i) s.push_back(random_function(rng, xs));
    return s;
}

}  // namespace

PolyBivector make_bivector(const std::string& prefix, int n,
                           const std::vector<std::tuple<int, int, DiffPoly>>& upper) {
    if (n < 1) throw std::invalid_argument("make_bivector: dimension must be positive");
    PolyBivector pb;
    auto& tab = FieldTable::instance();
    for (int i = 1; i <= n; ++i)
        pb.coords.push_back(tab.declare(prefix + std::to_string(i), Parity::even, 0, Rat(0)));
    pb.pi.assign(static_cast<std::size_t>(n), std::vector<DiffPoly>(static_cast<std::size_t>(n)));
    for (const auto& [i, j, value] : upper) {
        if (i < 1 || j < 1 || i > n || j > n || i >= j)
            throw std::invalid_argument("make_bivector: bad upper-triangle index pair");
        pb.pi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
        pb.pi[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -value;
    }
    return pb;
}

PolyBivector preset_bivector(const std::string& name) {
    auto& tab = FieldTable::instance();
    if (name == "sl2" || name == "corrupt") {
        // Coordinates (h, e, f) as y1, y2, y3.
        FieldId h = tab.declare("y1", Parity::even, 0, Rat(0));
        FieldId e = tab.declare("y2", Parity::even, 0, Rat(0));
        FieldId f = tab.declare("y3", Parity::even, 0, Rat(0));
        (void)h;
        std::vector<std::tuple<int, int, DiffPoly>> upper = {
            {1, 2, coord(e).scaled(Rat(2))},
            {1, 3, coord(f).scaled(Rat(-2))},
            {2, 3, coord(h)},
        };
        if (name == "corrupt")
            std::get<2>(upper[2]) += coord(e) * coord(e);  // quadratic defect breaks Jacobi
        return make_bivector("y", 3, upper);
    }
    if (name == "symplectic4") {
        PolyBivector pb = make_bivector("q", 4,
                                        {{1, 3, DiffPoly::constant(Rat(1))},
                                         {2, 4, DiffPoly::constant(Rat(1))}});
        return pb;
    }
    throw std::invalid_argument("preset_bivector: unknown preset '" + name + "'");
}

DiffPoly jacobi_defect(const PolyBivector& pb, int i, int j, int k) {
    const int n = pb.dim();
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
        throw std::out_of_range("jacobi_defect: index out of range");
    auto P = [&pb](int a, int b) -> const DiffPoly& {
        return pb.pi[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    };
    DiffPoly out;
    for (int l = 1; l <= n; ++l) {
        FieldId xl = pb.coords[static_cast<std::size_t>(l - 1)];
        out += P(i, l) * pd(P(j, k), xl);
        out += P(j, l) * pd(P(k, i), xl);
        out += P(k, l) * pd(P(i, j), xl);
    }
    return out;
}

bool is_poisson(const PolyBivector& pb) {
    const int n = pb.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (!jacobi_defect(pb, i, j, k).is_zero()) return false;
    return true;
}

std::vector<DiffPoly> anchor_fd(const PolyBivector& pb, const CotangentSection& eps) {
    const std::size_t n = static_cast<std::size_t>(pb.dim());
    if (eps.size() != n) throw std::invalid_argument("anchor_fd: section has wrong dimension");
    std::vector<DiffPoly> v(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i] += eps[j] * pb.pi[j][i];
    return v;
}

DiffPoly anchor_apply_fd(const PolyBivector& pb, const CotangentSection& eps, const DiffPoly& f) {
    std::vector<DiffPoly> v = anchor_fd(pb, eps);
    DiffPoly out;
    for (std::size_t i = 0; i < v.size(); ++i) out += v[i] * pd(f, pb.coords[i]);
    return out;
}

CotangentSection bracket_fd(const PolyBivector& pb, const CotangentSection& a,
                            const CotangentSection& b) {
    const std::size_t n = static_cast<std::size_t>(pb.dim());
    if (a.size() != n || b.size() != n)
        throw std::invalid_argument("bracket_fd: section has wrong dimension");
    CotangentSection out(n);
    for (std::size_t k = 0; k < n; ++k) {
        DiffPoly acc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                acc += a[j] * pd(pb.pi[j][i], pb.coords[k]) * b[i];
                acc += pb.pi[j][i] * (a[j] * pd(b[k], pb.coords[i]) - b[j] * pd(a[k], pb.coords[i]));
            }
        out[k] = acc;
    }
    return out;
}

AlgebroidReportFd verify_algebroid_fd(const PolyBivector& pb, std::uint64_t seed, int rounds) {
    std::mt19937_64 rng(seed);
    AlgebroidReportFd rep;
    rep.antisymmetry = rep.leibniz = rep.anchor_homomorphism = rep.jacobi = true;

    for (int round = 0; round < rounds; ++round) {
        CotangentSection a = random_section(rng, pb.coords);
        CotangentSection b = random_section(rng, pb.coords);
        CotangentSection c = random_section(rng, pb.coords);
        DiffPoly f = random_function(rng, pb.coords);

        CotangentSection ab = bracket_fd(pb, a, b);
        CotangentSection ba = bracket_fd(pb, b, a);
        for (std::size_t k = 0; k < ab.size(); ++k)
            if (!(ab[k] + ba[k]).is_zero()) rep.antisymmetry = false;

        // [a, f b] = f [a,b] + (delta_a f) b.
        CotangentSection fb(b.size());
        for (std::size_t k = 0; k < b.size(); ++k) fb[k] = f * b[k];
        CotangentSection lhs = bracket_fd(pb, a, fb);
        DiffPoly daf = anchor_apply_fd(pb, a, f);
        for (std::size_t k = 0; k < b.size(); ++k) {
            DiffPoly rhs = f * ab[k] + daf * b[k];
            if (!(lhs[k] == rhs)) rep.leibniz = false;
        }

        // [delta_a, delta_b] f = delta_{[a,b]} f.
        DiffPoly comm = anchor_apply_fd(pb, a, anchor_apply_fd(pb, b, f)) -
                        anchor_apply_fd(pb, b, anchor_apply_fd(pb, a, f));
        if (!(comm == anchor_apply_fd(pb, ab, f))) rep.anchor_homomorphism = false;

        // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0.
        CotangentSection bc = bracket_fd(pb, b, c);
        CotangentSection ca = bracket_fd(pb, c, a);
        CotangentSection j1 = bracket_fd(pb, ab, c);
        CotangentSection j2 = bracket_fd(pb, bc, a);
        CotangentSection j3 = bracket_fd(pb, ca, b);
        for (std::size_t k = 0; k < j1.size(); ++k)
            if (!(j1[k] + j2[k] + j3[k]).is_zero()) rep.jacobi = false;
    }
    return rep;
}

}  // namespace agd
