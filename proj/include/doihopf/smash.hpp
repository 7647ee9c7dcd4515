// The smash product A # C*, Koppinen's smash product #(C, A) on Hom(C, A),
// the comparison map between them, and the module actions on Hom(C, A)
// and Hom(C, #(C, A)) that the integral conditions are written in.
//
// Basis conventions:
//   * A # C* lives on the product basis a_i # c*_j at index i*dimC + j.
//   * Hom(C, A) lives on the product basis c*_j (x) a_i at index j*dimA + i,
//     which is exactly the column-stacked coordinate vector of an
//     dimA x dimC matrix; the basis map at index j*dimA + i sends c_j to a_i.

#pragma once

#include "datum.hpp"

namespace doihopf {

/// The H-action on C* dual to the C-action: (h . c*)(c) = c*(c . h),
/// as a matrix H (x) C* -> C*.
template <Field F>
Matrix<F> h_action_on_cstar(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), h = d.dim_h();
    // column (hi, q) holds h_hi . c*_q; its entry j is <c*_q, c_j . h_hi>
    Matrix<F> m(f, c, h * c);
    for (std::size_t hi = 0; hi < h; ++hi)
        for (std::size_t q = 0; q < c; ++q)
            for (std::size_t j = 0; j < c; ++j)
                m.at(q, hi * c + j) = d.c.action.at(j, q * h + hi);
    return m;
}

template <Field F>
struct SmashProduct {
    DoiHopfDatum<F> datum;
    StructAlgebra<F> algebra;  // on basis a_i # c*_j
};

template <Field F>
struct KoppinenAlgebra {
    DoiHopfDatum<F> datum;
    StructAlgebra<F> algebra;  // on basis c*_j (x) a_i
};

/// Koppinen's product of two maps C -> A (given as dimA x dimC matrices):
/// (f . g)(c) = sum f(c_(1))_<0> g(c_(2) . f(c_(1))_<-1>).
template <Field F>
Matrix<F> koppinen_product(const DoiHopfDatum<F>& d, const Matrix<F>& fm, const Matrix<F>& gm) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto idc = Matrix<F>::identity(f, c);
    const auto ida = Matrix<F>::identity(f, a);
    auto m = kron(fm, idc) * d.c.coalgebra.comult;        // C -> A (x) C
    m = kron(d.a.coaction, idc) * m;                      // -> H (x) A (x) C
    m = tensor_permute(f, {h, a, c}, {1, 2, 0}) * m;      // -> A (x) C (x) H
    m = kron(ida, d.c.action) * m;                        // -> A (x) C
    m = kron(ida, gm) * m;                                // -> A (x) A
    return d.a.algebra.mult * m;
}

/// Builds #(C, A); the unit is u_A o eps_C.
template <Field F>
KoppinenAlgebra<F> build_koppinen(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < a; ++i)
            labels.push_back("[" + d.c.coalgebra.labels[j] + "\xE2\x86\xA6" +
                             d.a.algebra.labels[i] + "]");
    StructAlgebra<F> alg(f, c * a, std::move(labels));
    for (std::size_t u = 0; u < c * a; ++u) {
        Matrix<F> eu(f, c * a, 1);
        eu[u] = f.one();
        const auto fu = Matrix<F>::from_vector(eu, a, c);
        for (std::size_t v = 0; v < c * a; ++v) {
            Matrix<F> ev(f, c * a, 1);
            ev[v] = f.one();
            const auto fv = Matrix<F>::from_vector(ev, a, c);
            const auto prod = koppinen_product(d, fu, fv).vectorize();
            for (std::size_t m = 0; m < c * a; ++m) alg.mult.at(m, u * c * a + v) = prod[m];
        }
    }
    alg.unit = convolution_unit(d.c.coalgebra, d.a.algebra).vectorize();
    auto rep = validate_algebra(alg);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return {d, std::move(alg)};
}

/// Builds A # C* with multiplication
/// (a # c*)(b # d*) = sum a_<0> b # c* * (a_<-1> . d*).
template <Field F>
SmashProduct<F> build_smash(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto cstar_mult = dual_algebra(d.c.coalgebra).mult;  // c x c^2
    const auto hact = h_action_on_cstar(d);                    // c x (h c)

    // (A C*) (x) (A C*) -> A (x) C*
    auto m = kron(d.a.coaction, Matrix<F>::identity(f, c * a * c));   // -> (h a0 c* b d*)
    m = tensor_permute(f, {h, a, c, a, c}, {1, 3, 2, 0, 4}) * m;      // -> (a0 b c* h d*)
    m = kron(Matrix<F>::identity(f, a * a * c), hact) * m;            // -> (a0 b c* e*)
    m = kron(d.a.algebra.mult, cstar_mult) * m;                       // -> (ab, c* * e*)

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < c; ++j)
            labels.push_back(d.a.algebra.labels[i] + "#" + d.c.coalgebra.labels[j] + "*");
    StructAlgebra<F> alg(f, a * c, std::move(labels));
    alg.mult = std::move(m);
    alg.unit = kron(d.a.algebra.unit, d.c.coalgebra.counit.transpose());
    auto rep = validate_algebra(alg);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return {d, std::move(alg)};
}

/// The comparison i: A # C* -> #(C, A), i(a # c*)(c) = <c*, c> a.
/// At finite dimension it is an algebra isomorphism; both facts are
/// re-verified here.
template <Field F>
Matrix<F> comparison_i(const SmashProduct<F>& s, const KoppinenAlgebra<F>& k) {
    const auto& d = s.datum;
    if (!same_hopf(d.h, k.datum.h) || d.a.coaction != k.datum.a.coaction ||
        d.c.action != k.datum.c.action)
        throw InputError("comparison_i: smash and Koppinen products come from different data");
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    Matrix<F> m(f, c * a, a * c);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(j * a + i, i * c + j) = f.one();
    // algebra morphism and invertibility checks
    ValidationReport rep;
    if (m * s.algebra.unit != k.algebra.unit) rep.add("comparison preserves the unit", "(1)");
    for (std::size_t u = 0; u < a * c && rep.ok(); ++u)
        for (std::size_t v = 0; v < a * c && rep.ok(); ++v) {
            const auto eu = Matrix<F>::basis_vector(f, a * c, u);
            const auto ev = Matrix<F>::basis_vector(f, a * c, v);
            if (m * s.algebra.mul_vec(eu, ev) != k.algebra.mul_vec(m * eu, m * ev))
                rep.add("comparison is multiplicative",
                        detail::tuple_label(u * a * c + v, {a * c, a * c},
                                            {&s.algebra.labels, &s.algebra.labels}));
        }
    if (!inverse(m)) rep.add("comparison is invertible", "rank defect");
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return m;
}

// ---------------------------------------------------------------------------
// The (A, A # C*)-bimodule structure on Hom(C, A)
// ---------------------------------------------------------------------------

/// (a . f)(c) = sum a_<0> f(c . a_<-1>).
template <Field F>
Matrix<F> homca_left(const DoiHopfDatum<F>& d, const Matrix<F>& a_vec, const Matrix<F>& fm) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto rho_a = d.a.coaction * a_vec;  // in H (x) A
    Matrix<F> out(f, a, c);
    for (std::size_t hi = 0; hi < h; ++hi)
        for (std::size_t ai = 0; ai < a; ++ai) {
            const auto& coeff = rho_a[hi * a + ai];
            if (f.is_zero(coeff)) continue;
            const auto term = d.a.algebra.left_mult_operator(Matrix<F>::basis_vector(f, a, ai)) *
                              fm * d.c.act_by(Matrix<F>::basis_vector(f, h, hi));
            out = out + term.scaled(coeff);
        }
    return out;
}

/// (f . a)(c) = f(c) a.
template <Field F>
Matrix<F> homca_right(const DoiHopfDatum<F>& d, const Matrix<F>& fm, const Matrix<F>& a_vec) {
    return d.a.algebra.right_mult_operator(a_vec) * fm;
}

/// (f . c*)(c) = sum f(c_(1))_<0> <c*, c_(2) . f(c_(1))_<-1>>.
template <Field F>
Matrix<F> homca_right_cstar(const DoiHopfDatum<F>& d, const Matrix<F>& fm,
                            const Matrix<F>& cstar) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto idc = Matrix<F>::identity(f, c);
    const auto ida = Matrix<F>::identity(f, a);
    auto m = kron(fm, idc) * d.c.coalgebra.comult;    // C -> A (x) C
    m = kron(d.a.coaction, idc) * m;                  // -> H (x) A (x) C
    m = tensor_permute(f, {h, a, c}, {1, 2, 0}) * m;  // -> A (x) C (x) H
    m = kron(ida, d.c.action) * m;                    // -> A (x) C
    m = kron(ida, cstar.transpose()) * m;             // -> A
    return m;
}

/// The three actions of the bimodule assembled as matrices on coordinate
/// vectors of Hom(C, A).
template <Field F>
struct HomCAActions {
    Matrix<F> left_a;       // (c a) x (a * c a):  a (x) f  |->  a . f
    Matrix<F> right_a;      // (c a) x (c a * a):  f (x) a  |->  f . a
    Matrix<F> right_cstar;  // (c a) x (c a * c):  f (x) c* |->  f . c*
};

template <Field F>
HomCAActions<F> hom_ca_actions(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    const std::size_t n = c * a;
    HomCAActions<F> acts{Matrix<F>(f, n, a * n), Matrix<F>(f, n, n * a), Matrix<F>(f, n, n * c)};
    for (std::size_t u = 0; u < n; ++u) {
        const auto fm = Matrix<F>::from_vector(Matrix<F>::basis_vector(f, n, u), a, c);
        for (std::size_t p = 0; p < a; ++p) {
            const auto ap = Matrix<F>::basis_vector(f, a, p);
            const auto l = homca_left(d, ap, fm).vectorize();
            const auto r = homca_right(d, fm, ap).vectorize();
            for (std::size_t m = 0; m < n; ++m) {
                acts.left_a.at(m, p * n + u) = l[m];
                acts.right_a.at(m, u * a + p) = r[m];
            }
        }
        for (std::size_t q = 0; q < c; ++q) {
            const auto cs = Matrix<F>::basis_vector(f, c, q);
            const auto r = homca_right_cstar(d, fm, cs).vectorize();
            for (std::size_t m = 0; m < n; ++m) acts.right_cstar.at(m, u * c + q) = r[m];
        }
    }
    return acts;
}

// ---------------------------------------------------------------------------
// The A-bimodule structure on Hom(C, #(C, A))
// ---------------------------------------------------------------------------

/// Elements of Hom(C, #(C, A)) are (c a) x c matrices: column k is the
/// coordinate vector of the value on c_k.

/// (a ->> G)(c) = sum a_<0> . G(c . a_<-1>), the value-side action being
/// the left A-action on Hom(C, A).
template <Field F>
Matrix<F> hom_c_homca_left(const DoiHopfDatum<F>& d, const Matrix<F>& a_vec,
                           const Matrix<F>& gmat) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto rho_a = d.a.coaction * a_vec;
    Matrix<F> out(f, c * a, c);
    for (std::size_t hi = 0; hi < h; ++hi)
        for (std::size_t ai = 0; ai < a; ++ai) {
            const auto& coeff = rho_a[hi * a + ai];
            if (f.is_zero(coeff)) continue;
            const auto shifted = gmat * d.c.act_by(Matrix<F>::basis_vector(f, h, hi));
            // apply a_<0> . (-) columnwise
            Matrix<F> term(f, c * a, c);
            for (std::size_t k = 0; k < c; ++k) {
                Matrix<F> col(f, c * a, 1);
                for (std::size_t m = 0; m < c * a; ++m) col[m] = shifted.at(m, k);
                const auto acted =
                    homca_left(d, Matrix<F>::basis_vector(f, a, ai),
                               Matrix<F>::from_vector(col, a, c))
                        .vectorize();
                for (std::size_t m = 0; m < c * a; ++m) term.at(m, k) = acted[m];
            }
            out = out + term.scaled(coeff);
        }
    return out;
}

/// (G <<- a)(c) = G(c) . a.
template <Field F>
Matrix<F> hom_c_homca_right(const DoiHopfDatum<F>& d, const Matrix<F>& gmat,
                            const Matrix<F>& a_vec) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    Matrix<F> out(f, c * a, c);
    for (std::size_t k = 0; k < c; ++k) {
        Matrix<F> col(f, c * a, 1);
        for (std::size_t m = 0; m < c * a; ++m) col[m] = gmat.at(m, k);
        const auto acted =
            homca_right(d, Matrix<F>::from_vector(col, a, c), a_vec).vectorize();
        for (std::size_t m = 0; m < c * a; ++m) out.at(m, k) = acted[m];
    }
    return out;
}

/// Both Hom(C, #(C, A)) actions as matrices on coordinate vectors
/// (the space has dimension c * (c a)).
template <Field F>
struct HomCHomCAActions {
    Matrix<F> left;   // (c ca) x (a * c ca)
    Matrix<F> right;  // (c ca) x (c ca * a)
};

template <Field F>
HomCHomCAActions<F> hom_c_hom_ca_actions(const DoiHopfDatum<F>& d) {
    const F& f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    const std::size_t n = c * (c * a);
    HomCHomCAActions<F> acts{Matrix<F>(f, n, a * n), Matrix<F>(f, n, n * a)};
    for (std::size_t u = 0; u < n; ++u) {
        const auto gmat = Matrix<F>::from_vector(Matrix<F>::basis_vector(f, n, u), c * a, c);
        for (std::size_t p = 0; p < a; ++p) {
            const auto ap = Matrix<F>::basis_vector(f, a, p);
            const auto l = hom_c_homca_left(d, ap, gmat).vectorize();
            const auto r = hom_c_homca_right(d, gmat, ap).vectorize();
            for (std::size_t m = 0; m < n; ++m) {
                acts.left.at(m, p * n + u) = l[m];
                acts.right.at(m, u * a + p) = r[m];
            }
        }
    }
    return acts;
}

}  // namespace doihopf
