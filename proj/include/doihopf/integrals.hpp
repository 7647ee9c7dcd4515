// The integral spaces attached to a Doi-Hopf datum, computed as exact
// affine solution spaces:
//
//   v1  maps C (x) C (x) A -> C (x) A in the Doi-Hopf category with two
//       extra module compatibilities
//   v2  maps C (x) C -> C (x) A
//   v3  maps C (x) C -> A
//   v4  maps C -> Hom(C, A)             (A-integrals)
//   v5  A-bimodule maps C (x) A -> Hom(C, A)
//   w1  elements of C (x) A centralized by A (dual A-integrals)
//   classical  functionals on a Hopf algebra invariant under convolution
//
// Every defining condition is one named LinearLaw; systems are compiled by
// probing the laws on elementary unknowns, so membership diagnostics name
// exactly the violated law.  A normalized element of any v-space certifies
// separability of the forgetful functor; a normalized dual integral
// certifies separability of the induction functor.

#pragma once

#include "smash.hpp"

#include <functional>

namespace doihopf {

enum class SpaceTag { V1, V2, V3, V4, V5, W1, ClassicalLeft };

inline std::string tag_name(SpaceTag t) {
    switch (t) {
        case SpaceTag::V1: return "v1";
        case SpaceTag::V2: return "v2";
        case SpaceTag::V3: return "v3";
        case SpaceTag::V4: return "v4";
        case SpaceTag::V5: return "v5";
        case SpaceTag::W1: return "w1";
        case SpaceTag::ClassicalLeft: return "classical";
    }
    return "?";
}

inline SpaceTag parse_tag(const std::string& s) {
    for (SpaceTag t : {SpaceTag::V1, SpaceTag::V2, SpaceTag::V3, SpaceTag::V4, SpaceTag::V5,
                       SpaceTag::W1, SpaceTag::ClassicalLeft})
        if (tag_name(t) == s) return t;
    throw InputError("unknown space tag '" + s + "'");
}

/// Unknown-map shape for each space.
template <Field F>
std::pair<std::size_t, std::size_t> space_shape(const DoiHopfDatum<F>& d, SpaceTag t) {
    const std::size_t c = d.dim_c(), a = d.dim_a();
    switch (t) {
        case SpaceTag::V1: return {c * a, c * c * a};
        case SpaceTag::V2: return {c * a, c * c};
        case SpaceTag::V3: return {a, c * c};
        case SpaceTag::V4: return {c * a, c};
        case SpaceTag::V5: return {c * a, c * a};
        case SpaceTag::W1: return {c * a, 1};
        case SpaceTag::ClassicalLeft: return {1, d.dim_h()};
    }
    throw InputError("bad tag");
}

/// One linear condition on the unknown map U; with a target the law is
/// the affine condition lhs(U) == target (lhs always linear).
template <Field F>
struct LinearLaw {
    std::string name;
    std::function<Matrix<F>(const Matrix<F>&)> lhs;
    std::optional<Matrix<F>> target;

    Matrix<F> residual(const Matrix<F>& u) const {
        auto r = lhs(u);
        if (target) r = r - *target;
        return r;
    }
};

/// Evaluation Hom(C, A) (x) C -> A on coordinate vectors.
template <Field F>
Matrix<F> hom_eval(const F& f, std::size_t c, std::size_t a) {
    Matrix<F> ev(f, a, c * a * c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < a; ++i) ev.at(i, (j * a + i) * c + j) = f.one();
    return ev;
}

namespace detail {

/// theta(c (x) d) = gamma(c)(d) as a matrix, from a v4 unknown.
template <Field F>
Matrix<F> theta_of_gamma(const DoiHopfDatum<F>& d, const Matrix<F>& gamma) {
    return hom_eval(d.field(), d.dim_c(), d.dim_a()) *
           kron(gamma, Matrix<F>::identity(d.field(), d.dim_c()));
}

/// The two defining v3 laws, shared by v3/v4/v5 through their theta.
template <Field F>
void add_theta_laws(std::vector<LinearLaw<F>>& laws, const DoiHopfDatum<F>& d,
                    std::function<Matrix<F>(const Matrix<F>&)> theta_of) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto idc = Matrix<F>::identity(f, c);
    const auto ida = Matrix<F>::identity(f, a);
    const auto comult = d.c.coalgebra.comult;
    const auto coaction = d.a.coaction;
    const auto action = d.c.action;
    const auto mult = d.a.algebra.mult;
    // (c, d, b) -> (b_<0>, c . b_<-2>, d . b_<-1>)
    const auto twist = kron(ida, kron(action, action)) *
                       tensor_permute(f, {c, c, h, h, a}, {4, 0, 2, 1, 3}) *
                       kron(Matrix<F>::identity(f, c * c), d.a.iterated_coaction(2));

    laws.push_back({"A-action twist",
                    [=](const Matrix<F>& u) {
                        const auto th = theta_of(u);
                        // theta(c, d) b  ==  sum b_<0> theta(c . b_<-2>, d . b_<-1>)
                        return mult * kron(th, ida) - mult * kron(ida, th) * twist;
                    },
                    std::nullopt});

    laws.push_back({"colinearity exchange",
                    [=](const Matrix<F>& u) {
                        const auto th = theta_of(u);
                        // sum c_(1) (x) theta(c_(2), d)
                        const auto lhsm = kron(idc, th) * kron(comult, idc);
                        // sum d_(2) . theta(c, d_(1))_<-1>  (x)  theta(c, d_(1))_<0>
                        auto r = kron(th, idc) * kron(idc, comult);       // -> A (x) C
                        r = kron(coaction, idc) * r;                      // -> H A C
                        r = tensor_permute(f, {h, a, c}, {2, 0, 1}) * r;  // -> C H A
                        r = kron(action, ida) * r;                        // -> C A
                        return lhsm - r;
                    },
                    std::nullopt});
}

/// (c, d) -> sum epsilon(c') (d_(2) . a'_<-1>) (x) a'_<0> where
/// c' (x) a' = u(c, d_(1)): the reduction both v1 and v2 satisfy.
template <Field F>
Matrix<F> coaction_reduction(const DoiHopfDatum<F>& d, const Matrix<F>& u_on_cc) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto idc = Matrix<F>::identity(f, c);
    const auto ida = Matrix<F>::identity(f, a);
    auto m = kron(u_on_cc, idc) * kron(idc, d.c.coalgebra.comult);  // -> (c', a', d2)
    m = kron(kron(d.c.coalgebra.counit, d.a.coaction), idc) * m;    // -> (h, a0, d2)
    m = tensor_permute(f, {h, a, c}, {2, 0, 1}) * m;                // -> (d2, h, a0)
    return kron(d.c.action, ida) * m;                               // -> C (x) A
}

}  // namespace detail

/// The defining laws of each space (normalization excluded).
template <Field F>
std::vector<LinearLaw<F>> space_laws(const DoiHopfDatum<F>& d, SpaceTag tag) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a(), h = d.dim_h();
    const auto idc = Matrix<F>::identity(f, c);
    const auto ida = Matrix<F>::identity(f, a);
    std::vector<LinearLaw<F>> laws;
    const DoiHopfDatum<F> dd = d;

    switch (tag) {
        case SpaceTag::V1: {
            const auto act_ca = induced_action(d, d.a.algebra.mult);
            const auto coact_ca = induced_coaction(d, a);
            const auto act_cca = cca_action(d);
            const auto coact_cca = cca_coaction(d);
            const auto l_ca = left_action_on_ca(d);
            // b . (c (x) d (x) a) = c (x) d (x) ba
            const auto l_cca = kron(Matrix<F>::identity(f, c * c), d.a.algebra.mult) *
                               tensor_permute(f, {a, c, c, a}, {1, 2, 0, 3});
            const auto embed_unit = kron(Matrix<F>::identity(f, c * c), d.a.algebra.unit);
            laws.push_back({"right A-linearity",
                            [=](const Matrix<F>& u) {
                                return u * act_cca - act_ca * kron(u, ida);
                            },
                            std::nullopt});
            laws.push_back({"C-colinearity",
                            [=](const Matrix<F>& u) {
                                return coact_ca * u - kron(idc, u) * coact_cca;
                            },
                            std::nullopt});
            laws.push_back({"left A-linearity",
                            [=](const Matrix<F>& u) {
                                return u * l_cca - l_ca * kron(ida, u);
                            },
                            std::nullopt});
            laws.push_back({"coaction reduction",
                            [=](const Matrix<F>& u) {
                                return detail::coaction_reduction(dd, u * embed_unit) -
                                       u * embed_unit;
                            },
                            std::nullopt});
            break;
        }
        case SpaceTag::V2: {
            const auto act_ca = induced_action(d, d.a.algebra.mult);
            const auto coact_ca = induced_coaction(d, a);
            const auto l_ca = left_action_on_ca(d);
            // (c, d, b) -> (b_<0>, c . b_<-2>, d . b_<-1>)
            const auto twist = kron(ida, kron(d.c.action, d.c.action)) *
                               tensor_permute(f, {c, c, h, h, a}, {4, 0, 2, 1, 3}) *
                               kron(Matrix<F>::identity(f, c * c), d.a.iterated_coaction(2));
            laws.push_back({"coaction reduction",
                            [=](const Matrix<F>& u) {
                                return detail::coaction_reduction(dd, u) - u;
                            },
                            std::nullopt});
            laws.push_back({"A-action twist",
                            [=](const Matrix<F>& u) {
                                // sum b_<0> . u(c . b_<-2>, d . b_<-1>)  ==  u(c, d) . b
                                return l_ca * kron(ida, u) * twist - act_ca * kron(u, ida);
                            },
                            std::nullopt});
            laws.push_back({"C-colinearity",
                            [=](const Matrix<F>& u) {
                                return kron(idc, u) * kron(d.c.coalgebra.comult, idc) -
                                       coact_ca * u;
                            },
                            std::nullopt});
            break;
        }
        case SpaceTag::V3: {
            detail::add_theta_laws<F>(laws, d, [](const Matrix<F>& u) { return u; });
            break;
        }
        case SpaceTag::V4: {
            detail::add_theta_laws<F>(laws, d, [dd](const Matrix<F>& u) {
                return detail::theta_of_gamma(dd, u);
            });
            break;
        }
        case SpaceTag::V5: {
            const auto act_ca = induced_action(d, d.a.algebra.mult);
            const auto l_ca = left_action_on_ca(d);
            const auto acts = hom_ca_actions(d);
            laws.push_back({"left A-linearity",
                            [=](const Matrix<F>& u) {
                                return u * l_ca - acts.left_a * kron(Matrix<F>::identity(f, a), u);
                            },
                            std::nullopt});
            laws.push_back({"right A-linearity",
                            [=](const Matrix<F>& u) {
                                return u * act_ca - acts.right_a * kron(u, ida);
                            },
                            std::nullopt});
            const auto embed = kron(idc, d.a.algebra.unit);  // C -> C (x) A
            detail::add_theta_laws<F>(laws, d, [dd, embed](const Matrix<F>& u) {
                return detail::theta_of_gamma(dd, u * embed);
            });
            break;
        }
        case SpaceTag::W1: {
            const auto act_ca = induced_action(d, d.a.algebra.mult);
            const auto l_ca = left_action_on_ca(d);
            laws.push_back({"A-centralizer",
                            [=](const Matrix<F>& z) {
                                Matrix<F> out(f, c * a, a);
                                for (std::size_t p = 0; p < a; ++p) {
                                    const auto ep = Matrix<F>::basis_vector(f, a, p);
                                    const auto l = l_ca * kron(ep, z);
                                    const auto r = act_ca * kron(z, ep);
                                    for (std::size_t m = 0; m < c * a; ++m)
                                        out.at(m, p) = f.sub(l[m], r[m]);
                                }
                                return out;
                            },
                            std::nullopt});
            break;
        }
        case SpaceTag::ClassicalLeft: {
            const auto comult = d.h.coalgebra.comult;
            const auto unit = d.h.algebra.unit;
            laws.push_back({"convolution invariance",
                            [=](const Matrix<F>& phi) {
                                // sum h_(1) phi(h_(2))  ==  phi(h) 1_H
                                return kron(Matrix<F>::identity(f, h), phi) * comult - unit * phi;
                            },
                            std::nullopt});
            break;
        }
    }
    return laws;
}

/// The affine normalization law of each space.
template <Field F>
LinearLaw<F> normalization_law(const DoiHopfDatum<F>& d, SpaceTag tag) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    const auto idc = Matrix<F>::identity(f, c);
    const auto comult = d.c.coalgebra.comult;
    const auto unit_counit = d.a.algebra.unit * d.c.coalgebra.counit;
    const DoiHopfDatum<F> dd = d;
    switch (tag) {
        case SpaceTag::V1: {
            // sum nu(c_(1), c_(2), a) == c (x) a
            const auto pre = kron(comult, Matrix<F>::identity(f, a));
            return {"unit splitting", [pre](const Matrix<F>& u) { return u * pre; },
                    Matrix<F>::identity(f, c * a)};
        }
        case SpaceTag::V2:
            return {"counit normalization", [comult](const Matrix<F>& u) { return u * comult; },
                    kron(idc, d.a.algebra.unit)};
        case SpaceTag::V3:
            return {"coseparability normalization",
                    [comult](const Matrix<F>& u) { return u * comult; }, unit_counit};
        case SpaceTag::V4:
            return {"totality",
                    [dd, comult](const Matrix<F>& u) {
                        return detail::theta_of_gamma(dd, u) * comult;
                    },
                    unit_counit};
        case SpaceTag::V5: {
            const auto embed = kron(idc, d.a.algebra.unit);
            return {"totality",
                    [dd, comult, embed](const Matrix<F>& u) {
                        return detail::theta_of_gamma(dd, u * embed) * comult;
                    },
                    unit_counit};
        }
        case SpaceTag::W1: {
            const auto counit_a = kron(d.c.coalgebra.counit, Matrix<F>::identity(f, a));
            return {"counit normalization",
                    [counit_a](const Matrix<F>& z) { return counit_a * z; }, d.a.algebra.unit};
        }
        case SpaceTag::ClassicalLeft:
            return {"unit normalization",
                    [unit = d.h.algebra.unit](const Matrix<F>& phi) { return phi * unit; },
                    Matrix<F>::identity(f, 1)};
    }
    throw InputError("bad tag");
}

/// An integral space: the affine solution set of the defining laws,
/// together with the tag and the unknown-map shape.
template <Field F>
struct IntegralSpace {
    SpaceTag which;
    DoiHopfDatum<F> datum;
    std::size_t urows = 0, ucols = 0;
    AffineSolutionSpace<F> space;

    Matrix<F> element(std::size_t k) const {
        return Matrix<F>::from_vector(space.homogeneous_basis.at(k), urows, ucols);
    }
    std::optional<Matrix<F>> normalized_element() const {
        if (!space.particular) return std::nullopt;
        return Matrix<F>::from_vector(*space.particular, urows, ucols);
    }
};

/// Compiles the laws into one exact linear system by probing elementary
/// unknowns and solves it.  With `normalized`, the affine normalization
/// rows are appended; the particular solution is then present iff a
/// normalized element exists.
template <Field F>
IntegralSpace<F> compute_space(const DoiHopfDatum<F>& d, SpaceTag tag, bool normalized) {
    const F f = d.field();
    const auto [urows, ucols] = space_shape(d, tag);
    const std::size_t n = urows * ucols;
    auto laws = space_laws(d, tag);
    if (normalized) laws.push_back(normalization_law(d, tag));

    std::vector<std::size_t> law_rows;
    {
        const Matrix<F> zero_u(f, urows, ucols);
        for (const auto& law : laws) {
            const auto r = law.lhs(zero_u);
            law_rows.push_back(r.rows() * r.cols());
        }
    }
    std::size_t total_rows = 0;
    for (auto r : law_rows) total_rows += r;

    Matrix<F> sys(f, total_rows, n);
    Matrix<F> rhs(f, total_rows, 1);
    {
        std::size_t off = 0;
        for (std::size_t li = 0; li < laws.size(); ++li) {
            if (laws[li].target) {
                const auto tv = laws[li].target->vectorize();
                for (std::size_t i = 0; i < law_rows[li]; ++i) rhs[off + i] = tv[i];
            }
            off += law_rows[li];
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        const auto u = Matrix<F>::from_vector(Matrix<F>::basis_vector(f, n, col), urows, ucols);
        std::size_t off = 0;
        for (std::size_t li = 0; li < laws.size(); ++li) {
            const auto v = laws[li].lhs(u).vectorize();
            for (std::size_t i = 0; i < law_rows[li]; ++i) sys.at(off + i, col) = v[i];
            off += law_rows[li];
        }
    }
    IntegralSpace<F> out{tag, d, urows, ucols, solve_affine(sys, rhs)};
    if (!normalized) out.space.particular.reset();  // homogeneous run carries no certificate
    return out;
}

/// Names every law the candidate violates (empty report = member).
template <Field F>
ValidationReport space_membership(const DoiHopfDatum<F>& d, SpaceTag tag, const Matrix<F>& u,
                                  bool normalized = false) {
    ValidationReport rep;
    const auto [urows, ucols] = space_shape(d, tag);
    if (u.rows() != urows || u.cols() != ucols) {
        rep.add("unknown shape",
                u.shape() + " expected " + std::to_string(urows) + "x" + std::to_string(ucols));
        return rep;
    }
    auto laws = space_laws(d, tag);
    if (normalized) laws.push_back(normalization_law(d, tag));
    for (const auto& law : laws)
        if (!law.residual(u).is_zero()) rep.add(law.name, "nonzero residual");
    return rep;
}

// ---------------------------------------------------------------------------
// Conversion maps between the five presentations
// ---------------------------------------------------------------------------

template <Field F>
Matrix<F> convert_v1_to_v2(const DoiHopfDatum<F>& d, const Matrix<F>& nu) {
    return nu * kron(Matrix<F>::identity(d.field(), d.dim_c() * d.dim_c()), d.a.algebra.unit);
}

template <Field F>
Matrix<F> convert_v2_to_v1(const DoiHopfDatum<F>& d, const Matrix<F>& lambda) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    // nu(c, d, b) = b . lambda(c, d)
    return left_action_on_ca(d) * kron(Matrix<F>::identity(f, a), lambda) *
           tensor_permute(f, {c, c, a}, {2, 0, 1});
}

template <Field F>
Matrix<F> convert_v2_to_v3(const DoiHopfDatum<F>& d, const Matrix<F>& lambda) {
    return kron(d.c.coalgebra.counit, Matrix<F>::identity(d.field(), d.dim_a())) * lambda;
}

template <Field F>
Matrix<F> convert_v3_to_v2(const DoiHopfDatum<F>& d, const Matrix<F>& theta) {
    const auto idc = Matrix<F>::identity(d.field(), d.dim_c());
    return kron(idc, theta) * kron(d.c.coalgebra.comult, idc);
}

template <Field F>
Matrix<F> convert_v3_to_v4(const DoiHopfDatum<F>& d, const Matrix<F>& theta) {
    const std::size_t c = d.dim_c(), a = d.dim_a();
    Matrix<F> gamma(d.field(), c * a, c);
    for (std::size_t k = 0; k < c; ++k)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < a; ++i) gamma.at(j * a + i, k) = theta.at(i, k * c + j);
    return gamma;
}

template <Field F>
Matrix<F> convert_v4_to_v3(const DoiHopfDatum<F>& d, const Matrix<F>& gamma) {
    return detail::theta_of_gamma(d, gamma);
}

template <Field F>
Matrix<F> convert_v4_to_v5(const DoiHopfDatum<F>& d, const Matrix<F>& gamma) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    // psi(c (x) b) = b . gamma(c)
    Matrix<F> psi(f, c * a, c * a);
    for (std::size_t k = 0; k < c; ++k) {
        Matrix<F> gk(f, c * a, 1);
        for (std::size_t m = 0; m < c * a; ++m) gk[m] = gamma.at(m, k);
        const auto gmat = Matrix<F>::from_vector(gk, a, c);
        for (std::size_t p = 0; p < a; ++p) {
            const auto v = homca_left(d, Matrix<F>::basis_vector(f, a, p), gmat).vectorize();
            for (std::size_t m = 0; m < c * a; ++m) psi.at(m, k * a + p) = v[m];
        }
    }
    return psi;
}

template <Field F>
Matrix<F> convert_v5_to_v4(const DoiHopfDatum<F>& d, const Matrix<F>& psi) {
    return psi * kron(Matrix<F>::identity(d.field(), d.dim_c()), d.a.algebra.unit);
}

/// Converts a member of space `from` into space `to` along the chain
/// v1 <-> v2 <-> v3 <-> v4 <-> v5; membership of the input is verified.
template <Field F>
Matrix<F> convert(const DoiHopfDatum<F>& d, SpaceTag from, SpaceTag to, const Matrix<F>& u) {
    auto idx = [](SpaceTag t) {
        switch (t) {
            case SpaceTag::V1: return 1;
            case SpaceTag::V2: return 2;
            case SpaceTag::V3: return 3;
            case SpaceTag::V4: return 4;
            case SpaceTag::V5: return 5;
            default: throw InputError("convert: only v1..v5 convert");
        }
    };
    auto rep = space_membership(d, from, u);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    int i = idx(from), j = idx(to);
    Matrix<F> cur = u;
    while (i < j) {
        switch (i) {
            case 1: cur = convert_v1_to_v2(d, cur); break;
            case 2: cur = convert_v2_to_v3(d, cur); break;
            case 3: cur = convert_v3_to_v4(d, cur); break;
            case 4: cur = convert_v4_to_v5(d, cur); break;
        }
        ++i;
    }
    while (i > j) {
        switch (i) {
            case 2: cur = convert_v2_to_v1(d, cur); break;
            case 3: cur = convert_v3_to_v2(d, cur); break;
            case 4: cur = convert_v4_to_v3(d, cur); break;
            case 5: cur = convert_v5_to_v4(d, cur); break;
        }
        --i;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Algebra structures on v3, v4 and w1
// ---------------------------------------------------------------------------

/// (theta . theta')(c (x) d) = sum theta(c_(3) (x) d) theta'(c_(1) (x) c_(2));
/// normalized elements are right units, hence idempotents.
template <Field F>
Matrix<F> v3_product(const DoiHopfDatum<F>& d, const Matrix<F>& theta, const Matrix<F>& theta2) {
    for (const auto* t : {&theta, &theta2}) {
        auto rep = space_membership(d, SpaceTag::V3, *t);
        if (!rep.ok()) throw ValidationError(std::move(rep));
    }
    const F f = d.field();
    const std::size_t c = d.dim_c();
    const auto idc = Matrix<F>::identity(f, c);
    auto m = kron(d.c.coalgebra.iterated_comult(3), idc);          // (c1,c2,c3,d)
    m = tensor_permute(f, {c, c, c, c}, {2, 3, 0, 1}) * m;         // (c3,d,c1,c2)
    m = d.a.algebra.mult * kron(theta, theta2) * m;
    auto rep = space_membership(d, SpaceTag::V3, m);
    if (!rep.ok()) throw ValidationError(std::move(rep));  // closure must hold
    return m;
}

/// Product on v4 as a subalgebra of the maps C -> #(C, A) with the
/// co-opposite convolution: (g . g')(c) = g(c_(2)) koppinen g'(c_(1)).
template <Field F>
Matrix<F> v4_product(const DoiHopfDatum<F>& d, const Matrix<F>& g1, const Matrix<F>& g2) {
    const F f = d.field();
    const std::size_t c = d.dim_c(), a = d.dim_a();
    Matrix<F> out(f, c * a, c);
    for (std::size_t k = 0; k < c; ++k) {
        const auto delta = d.c.coalgebra.comult * Matrix<F>::basis_vector(f, c, k);
        Matrix<F> acc(f, a, c);
        for (std::size_t pq = 0; pq < c * c; ++pq) {
            if (f.is_zero(delta[pq])) continue;
            const std::size_t p = pq / c, q = pq % c;
            Matrix<F> gq(f, c * a, 1), gp(f, c * a, 1);
            for (std::size_t m = 0; m < c * a; ++m) {
                gq[m] = g1.at(m, q);
                gp[m] = g2.at(m, p);
            }
            acc = acc + koppinen_product(d, Matrix<F>::from_vector(gq, a, c),
                                         Matrix<F>::from_vector(gp, a, c))
                            .scaled(delta[pq]);
        }
        const auto v = acc.vectorize();
        for (std::size_t m = 0; m < c * a; ++m) out.at(m, k) = v[m];
    }
    return out;
}

/// (sum c_i (x) a_i) . (sum c'_j (x) a'_j) = sum c'_j (x) eps(c_i) a_i a'_j;
/// normalized dual integrals are left units, hence idempotents.
template <Field F>
Matrix<F> w1_product(const DoiHopfDatum<F>& d, const Matrix<F>& z1, const Matrix<F>& z2) {
    for (const auto* z : {&z1, &z2}) {
        auto rep = space_membership(d, SpaceTag::W1, *z);
        if (!rep.ok()) throw ValidationError(std::move(rep));
    }
    const F f = d.field();
    const std::size_t a = d.dim_a();
    const auto w = kron(d.c.coalgebra.counit, Matrix<F>::identity(f, a)) * z1;  // in A
    const auto out =
        kron(Matrix<F>::identity(f, d.dim_c()), d.a.algebra.left_mult_operator(w)) * z2;
    auto rep = space_membership(d, SpaceTag::W1, out);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return out;
}

/// compute_space specialisation for dual integrals.
template <Field F>
IntegralSpace<F> compute_dual_integrals(const DoiHopfDatum<F>& d, bool normalized) {
    return compute_space(d, SpaceTag::W1, normalized);
}

}  // namespace doihopf
