// The Maschke machinery: the natural splitting built from a total
// A-integral, retraction/section lifting, separability verdicts, and the
// passage from separability idempotents of A over its coinvariants to
// normalized dual integrals.  Classical integral functionals on a Hopf
// algebra and their embedding into the A-integral picture live here too.

#pragma once

#include "integrals.hpp"

namespace doihopf {

template <Field F>
struct AIntegral {
    DoiHopfDatum<F> datum;
    Matrix<F> gamma;  // (dim C * dim A) x dim C
};

template <Field F>
struct DualAIntegral {
    DoiHopfDatum<F> datum;
    Matrix<F> z;  // (dim C * dim A) x 1
};

template <Field F>
AIntegral<F> make_a_integral(const DoiHopfDatum<F>& d, Matrix<F> gamma) {
    auto rep = space_membership(d, SpaceTag::V4, gamma);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return {d, std::move(gamma)};
}

template <Field F>
bool is_total(const AIntegral<F>& g) {
    return normalization_law(g.datum, SpaceTag::V4).residual(g.gamma).is_zero();
}

template <Field F>
DualAIntegral<F> make_dual_integral(const DoiHopfDatum<F>& d, Matrix<F> z) {
    auto rep = space_membership(d, SpaceTag::W1, z);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return {d, std::move(z)};
}

template <Field F>
bool is_normalized(const DualAIntegral<F>& z) {
    return normalization_law(z.datum, SpaceTag::W1).residual(z.z).is_zero();
}

// ---------------------------------------------------------------------------
// The splitting component and lifting
// ---------------------------------------------------------------------------

/// nu_M(c (x) m) = sum m_<0> gamma(c)(m_<-1>), the component at M of the
/// natural transformation an A-integral generates.  The result is verified
/// to be a map of Doi-Hopf modules C (x) M -> M.
template <Field F>
Matrix<F> nu_component(const AIntegral<F>& g, const DoiHopfModule<F>& m) {
    const auto& d = m.datum;
    if (!same_hopf(d.h, g.datum.h) || d.a.coaction != g.datum.a.coaction ||
        d.c.action != g.datum.c.action)
        throw InputError("nu_component: integral and module use different data");
    const F f = d.field();
    const std::size_t c = d.dim_c();
    const auto theta = detail::theta_of_gamma(d, g.gamma);
    // (c, m) -> (c, m_<-1>, m_<0>) -> (m_<0>, c, m_<-1>) -> m_<0> theta(c, m_<-1>)
    auto nu = kron(Matrix<F>::identity(f, c), m.coaction);
    nu = tensor_permute(f, {c, c, m.dim}, {2, 0, 1}) * nu;
    nu = m.action * kron(Matrix<F>::identity(f, m.dim), theta) * nu;

    const auto gfm = induced_module(d, m.action, m.dim, m.labels);
    if (!check_morphism(nu, gfm, m))
        throw ValidationError(
            ValidationReport{{{"splitting component is a Doi-Hopf morphism", "(nu)"}}});
    return nu;
}

/// Deforms an A-linear map r: N -> M into the Doi-Hopf morphism
/// nu_M o (I_C (x) r) o coaction_N.
template <Field F>
Matrix<F> deform_by_integral(const AIntegral<F>& g, const DoiHopfModule<F>& m,
                             const DoiHopfModule<F>& n, const Matrix<F>& r) {
    const auto nu = nu_component(g, m);
    return nu * kron(Matrix<F>::identity(m.datum.field(), m.datum.dim_c()), r) * n.coaction;
}

namespace detail {

template <Field F>
void require_a_linear(const DoiHopfModule<F>& m, const DoiHopfModule<F>& n, const Matrix<F>& r,
                      const char* what) {
    const auto ida = Matrix<F>::identity(m.datum.field(), m.datum.dim_a());
    if (r * n.action != m.action * kron(r, ida))
        throw ValidationError(ValidationReport{{{std::string(what) + " is A-linear", "(r)"}}});
}

}  // namespace detail

/// Lifts an A-module retraction r of a Doi-Hopf morphism u: M -> N to a
/// Doi-Hopf retraction (requires a total integral).
template <Field F>
Matrix<F> lift_retraction(const Matrix<F>& u, const DoiHopfModule<F>& m, const DoiHopfModule<F>& n,
                          const Matrix<F>& r, const AIntegral<F>& g) {
    if (!check_morphism(u, m, n))
        throw ValidationError(ValidationReport{{{"u is a Doi-Hopf morphism", "(u)"}}});
    detail::require_a_linear(m, n, r, "retraction");
    if (r * u != Matrix<F>::identity(m.datum.field(), m.dim))
        throw ValidationError(ValidationReport{{{"r retracts u", "(r u != id)"}}});
    if (!is_total(g))
        throw ValidationError(ValidationReport{{{"totality", "(integral is not total)"}}});
    auto rt = deform_by_integral(g, m, n, r);
    if (rt * u != Matrix<F>::identity(m.datum.field(), m.dim))
        throw ValidationError(ValidationReport{{{"lifted retraction splits u", "(post)"}}});
    if (!check_morphism(rt, n, m))
        throw ValidationError(ValidationReport{{{"lifted retraction is a morphism", "(post)"}}});
    return rt;
}

/// Lifts an A-module section s of a Doi-Hopf morphism u: M -> N to a
/// Doi-Hopf section, by the same deformation on the other side.
template <Field F>
Matrix<F> lift_section(const Matrix<F>& u, const DoiHopfModule<F>& m, const DoiHopfModule<F>& n,
                       const Matrix<F>& s, const AIntegral<F>& g) {
    if (!check_morphism(u, m, n))
        throw ValidationError(ValidationReport{{{"u is a Doi-Hopf morphism", "(u)"}}});
    detail::require_a_linear(m, n, s, "section");
    if (u * s != Matrix<F>::identity(m.datum.field(), n.dim))
        throw ValidationError(ValidationReport{{{"s sections u", "(u s != id)"}}});
    if (!is_total(g))
        throw ValidationError(ValidationReport{{{"totality", "(integral is not total)"}}});
    auto st = deform_by_integral(g, m, n, s);
    if (u * st != Matrix<F>::identity(m.datum.field(), n.dim))
        throw ValidationError(ValidationReport{{{"lifted section splits u", "(post)"}}});
    if (!check_morphism(st, n, m))
        throw ValidationError(ValidationReport{{{"lifted section is a morphism", "(post)"}}});
    return st;
}

// ---------------------------------------------------------------------------
// Separability verdicts
// ---------------------------------------------------------------------------

enum class FunctorTag { Forgetful, Induction };
enum class SepState { Yes, No, SufficientOnly };

inline std::string sep_state_name(SepState s) {
    switch (s) {
        case SepState::Yes: return "yes";
        case SepState::No: return "no";
        case SepState::SufficientOnly: return "sufficient-only";
    }
    return "?";
}

template <Field F>
struct SeparabilityVerdict {
    FunctorTag functor;
    SepState state;
    std::optional<AIntegral<F>> a_certificate;
    std::optional<DualAIntegral<F>> dual_certificate;
};

/// Forgetful: searches for a total A-integral; without an antipode a
/// failed search is only "sufficient condition not met".  Induction:
/// searches for a normalized dual integral (an equivalence either way).
template <Field F>
SeparabilityVerdict<F> decide_separability(const DoiHopfDatum<F>& d, FunctorTag functor) {
    SeparabilityVerdict<F> v{functor, SepState::No, std::nullopt, std::nullopt};
    if (functor == FunctorTag::Forgetful) {
        auto sp = compute_space(d, SpaceTag::V4, true);
        if (auto g = sp.normalized_element()) {
            v.state = SepState::Yes;
            v.a_certificate = AIntegral<F>{d, std::move(*g)};
        } else {
            v.state = d.h.antipode ? SepState::No : SepState::SufficientOnly;
        }
    } else {
        auto sp = compute_dual_integrals(d, true);
        if (auto z = sp.normalized_element()) {
            v.state = SepState::Yes;
            v.dual_certificate = DualAIntegral<F>{d, std::move(*z)};
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Separability idempotents over the coinvariants
// ---------------------------------------------------------------------------

/// Basis of B = { x in A : coaction(x) = 1_H (x) x }.
template <Field F>
std::vector<Matrix<F>> coinvariants(const ComoduleAlgebra<F>& ca) {
    const F& f = ca.algebra.field;
    const auto embed = kron(ca.h.algebra.unit, Matrix<F>::identity(f, ca.algebra.dim));
    return nullspace(ca.coaction - embed);
}

namespace detail {

/// Rows annihilating the B-balancing relations a b (x) a' - a (x) b a'
/// inside A (x) A; x lies in the balancing subspace iff these rows kill x.
template <Field F>
Matrix<F> balancing_annihilator(const StructAlgebra<F>& alg,
                                const std::vector<Matrix<F>>& b_basis) {
    const F& f = alg.field;
    const std::size_t a = alg.dim;
    std::vector<Matrix<F>> rel;
    for (const auto& b : b_basis)
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) {
                const auto ei = Matrix<F>::basis_vector(f, a, i);
                const auto ej = Matrix<F>::basis_vector(f, a, j);
                rel.push_back(kron(alg.mul_vec(ei, b), ej) - kron(ei, alg.mul_vec(b, ej)));
            }
    Matrix<F> rmat(f, a * a, rel.size());
    for (std::size_t k = 0; k < rel.size(); ++k)
        for (std::size_t m = 0; m < a * a; ++m) rmat.at(m, k) = rel[k][m];
    const auto ann = nullspace(rmat.transpose());  // functionals vanishing on the relations
    Matrix<F> rows(f, ann.size(), a * a);
    for (std::size_t k = 0; k < ann.size(); ++k)
        for (std::size_t m = 0; m < a * a; ++m) rows.at(k, m) = ann[k][m];
    return rows;
}

}  // namespace detail

/// Checks whether e in A (x) A is a separability idempotent of A over its
/// coinvariants B (both identities taken in A (x)_B A), and if so pushes
/// it to the normalized dual integral z = sum e^2_<-1> (x) e^1 e^2_<0>.
template <Field F>
DualAIntegral<F> dual_integral_from_separability_idempotent(const DoiHopfDatum<F>& d,
                                                            const Matrix<F>& e) {
    const F f = d.field();
    const std::size_t a = d.dim_a(), h = d.dim_h();
    if (d.dim_c() != h || d.c.action != d.h.algebra.mult)
        throw InputError("separability idempotent transfer needs the datum (H, A, H)");
    if (e.rows() != a * a || e.cols() != 1) throw InputError("e must live in A (x) A");

    const auto b_basis = coinvariants(d.a);
    const auto ann = detail::balancing_annihilator(d.a.algebra, b_basis);
    ValidationReport rep;
    for (std::size_t p = 0; p < a; ++p) {
        const auto ep = Matrix<F>::basis_vector(f, a, p);
        const auto la = kron(d.a.algebra.left_mult_operator(ep), Matrix<F>::identity(f, a));
        const auto ra = kron(Matrix<F>::identity(f, a), d.a.algebra.right_mult_operator(ep));
        if (!(ann * (la * e - ra * e)).is_zero()) {
            rep.add("idempotent centralizes A over B", detail::tuple_label(p, {a},
                                                                           {&d.a.algebra.labels}));
            break;
        }
    }
    if (d.a.algebra.mult * e != d.a.algebra.unit) rep.add("idempotent multiplies to 1", "(e)");
    if (!rep.ok()) throw ValidationError(std::move(rep));

    // z = sum e^2_<-1> (x) e^1 e^2_<0>
    auto z = kron(Matrix<F>::identity(f, a), d.a.coaction) * e;  // (e1, h, e2_0)
    z = tensor_permute(f, {a, h, a}, {1, 0, 2}) * z;             // (h, e1, e2_0)
    z = kron(Matrix<F>::identity(f, h), d.a.algebra.mult) * z;   // (h, e1 e2_0)
    auto out = make_dual_integral(d, std::move(z));
    if (!is_normalized(out))
        throw ValidationError(ValidationReport{{{"transferred integral is normalized", "(z)"}}});
    return out;
}

/// Searches for a separability idempotent of A over its coinvariants by
/// exact solving; returns nothing when none exists.
template <Field F>
std::optional<Matrix<F>> find_separability_idempotent(const ComoduleAlgebra<F>& ca) {
    const F& f = ca.algebra.field;
    const std::size_t a = ca.algebra.dim;
    const auto b_basis = coinvariants(ca);
    const auto ann = detail::balancing_annihilator(ca.algebra, b_basis);
    const std::size_t rows = ann.rows() * a + a;
    Matrix<F> sys(f, rows, a * a);
    Matrix<F> rhs(f, rows, 1);
    for (std::size_t p = 0; p < a; ++p) {
        const auto ep = Matrix<F>::basis_vector(f, a, p);
        const auto diff = ann * (kron(ca.algebra.left_mult_operator(ep),
                                      Matrix<F>::identity(f, a)) -
                                 kron(Matrix<F>::identity(f, a),
                                      ca.algebra.right_mult_operator(ep)));
        for (std::size_t i = 0; i < ann.rows(); ++i)
            for (std::size_t j = 0; j < a * a; ++j) sys.at(p * ann.rows() + i, j) = diff.at(i, j);
    }
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < a * a; ++j)
            sys.at(ann.rows() * a + i, j) = ca.algebra.mult.at(i, j);
        rhs[ann.rows() * a + i] = ca.algebra.unit[i];
    }
    auto sol = solve_affine(sys, rhs);
    return sol.particular;
}

// ---------------------------------------------------------------------------
// Classical integral functionals on a Hopf algebra
// ---------------------------------------------------------------------------

/// The functionals phi on H with h* . phi = <h*, 1> phi, i.e. the
/// H-colinear maps H -> k, realized inside the A-integral picture of the
/// datum (H, k, H):
///   to_v4   phi |-> gamma with gamma(x)(y) = phi(x S(y))
///   from_v4 gamma |-> phi with phi(x) = gamma(x)(1)
/// from_v4 o to_v4 is the identity.
template <Field F>
struct ClassicalIntegrals {
    DoiHopfDatum<F> datum;  // (H, k, H)
    IntegralSpace<F> space;
    Matrix<F> to_v4;    // dim H^2 x dim H
    Matrix<F> from_v4;  // dim H x dim H^2
};

template <Field F>
ClassicalIntegrals<F> classical_integrals(const HopfAlgebra<F>& h, bool normalized) {
    const F f = h.field();
    const std::size_t n = h.dim();
    const auto& s = h.antipode_or_throw();
    auto d = classical_datum(h);
    auto space = compute_space(d, SpaceTag::ClassicalLeft, normalized);

    // to_v4: theta^phi = phi o mult o (I (x) S), reshaped to a v4 element
    Matrix<F> to_v4(f, n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto phi = Matrix<F>::basis_vector(f, n, k).transpose();
        const auto theta = phi * h.algebra.mult * kron(Matrix<F>::identity(f, n), s);
        const auto g = convert_v3_to_v4(d, theta).vectorize();
        for (std::size_t m = 0; m < n * n; ++m) to_v4.at(m, k) = g[m];
    }
    // from_v4: phi(x) = gamma(x)(1)
    Matrix<F> from_v4(f, n, n * n);
    for (std::size_t col = 0; col < n * n; ++col) {
        const auto g = Matrix<F>::from_vector(Matrix<F>::basis_vector(f, n * n, col), n, n);
        const auto phi = detail::theta_of_gamma(d, g) * kron(Matrix<F>::identity(f, n),
                                                             h.algebra.unit);
        for (std::size_t m = 0; m < n; ++m) from_v4.at(m, col) = phi.at(0, m);
    }
    if (from_v4 * to_v4 != Matrix<F>::identity(f, n))
        throw ValidationError(
            ValidationReport{{{"classical embedding splits", "(from_v4 to_v4 != id)"}}});
    return {std::move(d), std::move(space), std::move(to_v4), std::move(from_v4)};
}

/// True iff theta lies in the image of the classical integrals inside v3:
/// sum theta(x l_(1) (x) y l_(2)) = theta(x (x) y) eps(l) for all x, y, l.
template <Field F>
bool in_classical_image(const HopfAlgebra<F>& h, const Matrix<F>& theta) {
    const F f = h.field();
    const std::size_t n = h.dim();
    auto m = kron(Matrix<F>::identity(f, n * n), h.coalgebra.comult);   // (x, y, l1, l2)
    m = tensor_permute(f, {n, n, n, n}, {0, 2, 1, 3}) * m;              // (x, l1, y, l2)
    m = theta * kron(h.algebra.mult, h.algebra.mult) * m;               // theta(xl1, yl2)
    return m == kron(theta, h.coalgebra.counit);
}

}  // namespace doihopf
