// Copyright 2026 The ppo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppo/verify.h"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "ppo/error.h"
#include "ppo/hw_clifford.h"
#include "ppo/mat_group.h"
#include "ppo/orbit_engine.h"
#include "ppo/phasespace_coords.h"
#include "ppo/spectra_census.h"

namespace ppo {

namespace {

constexpr int kSamples = 40;

class Runner {
   public:
    Runner(std::string suite, std::vector<VerifyCheck> &out) : suite_(std::move(suite)), out_(out) {
    }

    void check(const std::string &name, bool passed, const std::string &detail = "") {
        out_.push_back({suite_, name, passed, false, detail});
    }
    void skip(const std::string &name, const std::string &detail) {
        out_.push_back({suite_, name, true, true, detail});
    }

   private:
    std::string suite_;
    std::vector<VerifyCheck> &out_;
};

std::string fmt_err(double e) {
    std::ostringstream s;
    s << "max error " << e;
    return s.str();
}

template <typename T>
const T &pick(const std::vector<T> &v, std::mt19937_64 &rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

RVector random_rvec(std::uint32_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    RVector r(n + 1);
    for (auto &x : r) {
        x = dist(rng);
    }
    return r;
}

void field_suite(std::uint32_t n, std::mt19937_64 &, std::vector<VerifyCheck> &out) {
    Runner run("field", out);
    Field field(n);
    ResidueSets sets = residue_sets(field);
    bool ok = true;
    for (std::uint32_t x = 1; x < n; x++) {
        ok = ok && field.mul(x, field.inv(x)) == 1;
    }
    run.check("inverse", ok);
    ok = true;
    for (std::uint32_t a = 1; a < n; a++) {
        for (std::uint32_t b = 1; b < n; b++) {
            ok = ok && sets.legendre[field.mul(a, b)] == sets.legendre[a] * sets.legendre[b];
        }
    }
    run.check("legendre_multiplicative", ok);
    run.check("residue_split", sets.residues.size() == (n - 1) / 2 && sets.nonresidues.size() == (n - 1) / 2);
    run.check("minus_one_residue", sets.in_q(n - 1) == field.is_one_mod_four());
    ok = true;
    for (std::uint32_t x = 1; x < n; x++) {
        FieldElem e = field.elem(x);
        ok = ok && residue_intersection_count(e, sets) == residue_intersection_closed_form(e, sets);
    }
    run.check("residue_intersection_closed_form", ok);
    ok = true;
    for (std::uint32_t mu = 1; mu < n; mu++) {
        for (std::uint32_t nu = 0; nu < n; nu++) {
            FieldElem q = residue_shift_witness(field.elem(mu), field.elem(nu), sets);
            ok = ok && sets.in_q0(q.value()) && sets.in_q0(field.add(field.mul(mu, q.value()), nu));
        }
    }
    run.check("residue_shift_witness", ok);
}

void group_suite(std::uint32_t n, std::mt19937_64 &rng, std::vector<VerifyCheck> &out) {
    Runner run("group", out);
    Field field(n);
    ResidueSets sets = residue_sets(field);
    for (GroupKind kind : {GroupKind::SL, GroupKind::ESL}) {
        const std::string tag = group_kind_name(kind);
        auto elems = enumerate_group(field, kind);
        run.check("order_" + tag, elems.size() == group_order(n, kind));
        auto labels = conjugacy_class_labels(field, kind, sets);
        std::size_t expected = kind == GroupKind::SL ? n + 4 : (field.is_one_mod_four() ? 2 * n + 8 : 2 * n + 2);
        run.check("class_count_" + tag, labels.size() == expected);

        std::map<std::pair<int, std::pair<std::uint32_t, int>>, std::uint64_t> observed;
        for (const GroupElem &g : elems) {
            ConjClassLabel l = classify(g, kind, sets);
            observed[{l.det_sign, {l.trace, static_cast<int>(l.kind)}}]++;
        }
        bool sizes_ok = observed.size() == labels.size();
        for (const auto &l : labels) {
            sizes_ok = sizes_ok &&
                       observed[{l.det_sign, {l.trace, static_cast<int>(l.kind)}}] == class_size(l, kind, field, sets);
        }
        run.check("class_sizes_" + tag, sizes_ok);

        bool inv_ok = true;
        for (int k = 0; k < 10 * kSamples; k++) {
            const GroupElem &g = pick(elems, rng);
            const GroupElem &s = pick(elems, rng);
            inv_ok = inv_ok && classify(s * g * s.inverse(), kind, sets) == classify(g, kind, sets);
        }
        run.check("classify_conjugation_invariant_" + tag, inv_ok);
    }

    auto esl = enumerate_group(field, GroupKind::ESL);
    bool ok = true;
    for (int k = 0; k < 10 * kSamples; k++) {
        const GroupElem &f = pick(esl, rng);
        Conjugation c = standardize(f, sets);
        ok = ok && c.conjugator * c.representative * c.conjugator.inverse() == f &&
             c.conjugator.det_sign() == f.det_sign();
    }
    run.check("standardize_round_trip", ok);

    ok = true;
    for (GroupKind kind : {GroupKind::SL, GroupKind::ESL}) {
        for (const ClassInfo &info : class_table(field, kind)) {
            ok = ok && info.representative.pow(info.order).is_identity() && group_order(n, kind) % info.order == 0;
        }
    }
    run.check("cyclic_orders", ok);
}

void hilbert_suite(std::uint32_t n, std::mt19937_64 &rng, std::vector<VerifyCheck> &out) {
    Runner run("hilbert", out);
    Field field(n);
    HilbertSpace h(field);
    std::uniform_int_distribution<std::int64_t> coord(0, n - 1);
    const CMatrix id = CMatrix::identity(n);

    double product = 0, adjoint = 0, unitary = 0, power = 0;
    for (int k = 0; k < kSamples; k++) {
        std::int64_t q = coord(rng), p = coord(rng), q2 = coord(rng), p2 = coord(rng);
        CMatrix d = h.displacement(q, p);
        CMatrix lhs = d * h.displacement(q2, p2);
        CMatrix rhs = h.displacement(q + q2, p + p2) * h.weyl_product_phase(q, p, q2, p2);
        product = std::max(product, max_abs_diff(lhs, rhs));
        adjoint = std::max(adjoint, max_abs_diff(d.adjoint(), h.displacement(-q, -p)));
        unitary = std::max(unitary, unitarity_defect(d));
        CMatrix acc = id;
        for (std::uint32_t j = 0; j < n; j++) {
            acc = acc * d;
        }
        power = std::max(power, max_abs_diff(acc, id));
    }
    run.check("weyl_product", product < 1e-12, fmt_err(product));
    run.check("displacement_adjoint", adjoint < 1e-12, fmt_err(adjoint));
    run.check("displacement_unitary", unitary < 1e-12, fmt_err(unitary));
    run.check("displacement_power", power < 1e-12, fmt_err(power));

    auto sl = enumerate_group(field, GroupKind::SL);
    double cov = 0;
    for (int k = 0; k < kSamples / 4; k++) {
        const GroupElem &f = pick(sl, rng);
        CMatrix u = h.clifford_unitary(f);
        CMatrix ud = u.adjoint();
        for (std::int64_t q = 0; q < n; q++) {
            for (std::int64_t p = 0; p < n; p++) {
                CMatrix image = h.displacement(f.alpha() * q + f.beta() * p, f.gamma() * q + f.delta() * p);
                cov = std::max(cov, max_abs_diff(u * h.displacement(q, p) * ud, image));
            }
        }
    }
    run.check("clifford_covariance", cov < 1e-10, fmt_err(cov));

    double mub = 0;
    std::vector<CVector> vecs;
    for (std::uint32_t m = 0; m <= n; m++) {
        for (std::uint32_t r = 0; r < n; r++) {
            vecs.push_back(h.mub_vector({m, r}));
        }
    }
    for (std::size_t a = 0; a < vecs.size(); a++) {
        for (std::size_t b = 0; b < vecs.size(); b++) {
            double expected = a / n != b / n ? 1.0 / n : (a == b ? 1.0 : 0.0);
            mub = std::max(mub, std::abs(std::norm(inner(vecs[a], vecs[b])) - expected));
        }
    }
    run.check("mub_unbiased", mub < 1e-10, fmt_err(mub));

    double ppo_err = 0;
    for (int k = 0; k < kSamples; k++) {
        CMatrix a = h.phase_point_operator(random_rvec(n, rng));
        ppo_err = std::max({ppo_err, std::abs(a.trace() - 1.0), std::abs((a * a).trace() - Complex(n)),
                            hermitian_defect(a)});
    }
    run.check("phase_point_trace", ppo_err < 1e-10, fmt_err(ppo_err));

    std::normal_distribution<double> gauss;
    double marg = 0;
    for (int k = 0; k < 4; k++) {
        RVector r = random_rvec(n, rng);
        AffinePlane plane = h.affine_plane_operators(r);
        CMatrix g(n);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                g(i, j) = Complex(gauss(rng), gauss(rng));
            }
        }
        CMatrix rho = g * g.adjoint();
        rho = rho * (1.0 / rho.trace());
        auto w = wigner_distribution(rho, plane);
        for (std::uint32_t m = 0; m <= n; m++) {
            for (std::uint32_t c = 0; c < n; c++) {
                Line line{m, c};
                double sum = 0;
                for (const auto &pt : line.points(n)) {
                    sum += w.at(pt);
                }
                marg = std::max(marg, std::abs(sum / n - (rho * h.net_projector(r, line)).trace().real()));
            }
        }
    }
    run.check("wigner_marginals", marg < 1e-9, fmt_err(marg));
}

void coords_suite(std::uint32_t n, std::mt19937_64 &rng, std::vector<VerifyCheck> &out) {
    Runner run("coords", out);
    Field field(n);
    CoordinateSystem cs(field);
    HilbertSpace h(field);
    auto esl = enumerate_group(field, GroupKind::ESL);

    double oracle = 0;
    bool monomial = true;
    for (int k = 0; k < kSamples; k++) {
        const GroupElem &g = pick(esl, rng);
        ZnMatrix m = cs.esl_action(g);
        monomial = monomial && m.is_monomial();
        RVector r = random_rvec(n, rng);
        RVector image = m * std::span<const std::uint32_t>(r);
        oracle = std::max(oracle, max_abs_diff(h.extended_clifford_image(g, h.phase_point_operator(r)),
                                               h.phase_point_operator(image)));
    }
    run.check("monomial_action_oracle", oracle < 1e-9, fmt_err(oracle));
    run.check("action_monomial", monomial);

    bool hom = true;
    for (int k = 0; k < kSamples; k++) {
        const GroupElem &a = pick(esl, rng);
        const GroupElem &b = pick(esl, rng);
        hom = hom && cs.esl_action(a * b) == cs.esl_action(a) * cs.esl_action(b);
    }
    run.check("action_homomorphism", hom);

    const ZnMatrix &omega = cs.symplectic_form();
    const ZnMatrix tilde = cs.plane_symplectic_form();
    const ZnMatrix minus_tilde = tilde.scaled(n - 1);
    bool canonical = true, anti = true;
    for (const GroupElem &g : esl) {
        if (g.det_sign() == 1) {
            ZnMatrix u = cs.sl_action(g);
            canonical = canonical && u.transpose() * omega * u == omega;
        } else {
            ZnMatrix m = cs.plane_action(g);
            anti = anti && m.transpose() * tilde * m == minus_tilde;
        }
    }
    run.check("symplectic_invariance", canonical);
    run.check("anti_canonical", anti);

    auto basis = cs.canonical_symplectic_basis();
    const std::size_t dim = n - 1, half = dim / 2;
    ZnMatrix b(dim, dim, n), canon(dim, dim, n);
    for (std::size_t c = 0; c < dim; c++) {
        for (std::size_t r = 0; r < dim; r++) {
            b.set(r, c, basis[c][r]);
        }
    }
    for (std::size_t k = 0; k < half; k++) {
        canon.set(k, half + k, 1);
        canon.set(half + k, k, -1);
    }
    run.check("canonical_basis", b.transpose() * tilde * b == canon);

    bool translation = true, codes = true;
    std::uniform_int_distribution<std::uint64_t> code_dist(0, cs.plane_count() - 1);
    for (int k = 0; k < kSamples; k++) {
        RVector r = random_rvec(n, rng);
        translation = translation && cs.plane_label(cs.translate(r, k, 3 * k + 1)) == cs.plane_label(r);
        std::uint64_t c = code_dist(rng);
        codes = codes && cs.encode_plane(cs.plane_label(cs.plane_representative(cs.decode_plane(c)))) == c;
    }
    run.check("translation_preserves_plane", translation);
    run.check("plane_code_round_trip", codes);
}

void orbits_suite(std::uint32_t n, std::mt19937_64 &, std::vector<VerifyCheck> &out) {
    Runner run("orbits", out);
    CoordinateSystem cs{Field(n)};
    for (GroupKind kind : {GroupKind::SL, GroupKind::ESL}) {
        const std::string tag = group_kind_name(kind);
        BurnsideResult all = burnside_count(cs, kind, OrbitSpace::Planes);
        BurnsideResult by_class = burnside_count(cs, kind, OrbitSpace::Planes, BurnsideMode::ClassRepresentatives);
        run.check("burnside_exact_" + tag, all.exact, std::to_string(all.orbits) + " orbits");
        run.check("burnside_class_mode_" + tag, by_class.exact && by_class.orbits == all.orbits);
        if (n > 7) {
            run.skip("explicit_matches_burnside_" + tag, "explicit decomposition needs N <= 7");
            continue;
        }
        OrbitCatalog cat = orbit_decomposition(cs, kind);
        std::uint64_t total = 0;
        bool divides = true;
        for (const Orbit &o : cat.orbits) {
            total += o.size;
            divides = divides && group_order(n, kind) % o.size == 0;
        }
        run.check("explicit_matches_burnside_" + tag,
                  cat.orbits.size() == all.orbits && total == cs.plane_count() && divides);
    }
    for (const ClaimResult &c : structural_checks(cs)) {
        if (c.skipped) {
            run.skip(c.name, c.detail);
        } else {
            run.check(c.name, c.passed, c.detail);
        }
    }
}

void spectra_suite(std::uint32_t n, std::mt19937_64 &rng, std::vector<VerifyCheck> &out) {
    Runner run("spectra", out);
    if (n > 7) {
        run.skip("census", "spectra census needs N <= 7");
        return;
    }
    Field field(n);
    HilbertSpace h(field);
    CoordinateSystem cs(field);
    SpectraCensus census = spectra_census(h, cs);
    double trace = 0, square = 0;
    bool divides = true;
    for (const SpectrumClass &c : census.classes) {
        double s = 0, s2 = 0;
        for (double x : c.centroid.values) {
            s += x;
            s2 += x * x;
        }
        trace = std::max(trace, std::abs(s - 1));
        square = std::max(square, std::abs(s2 - n));
        divides = divides && group_order(n, GroupKind::ESL) % c.count == 0;
    }
    run.check("eigenvalue_sum", trace < 1e-8, fmt_err(trace));
    run.check("eigenvalue_square_sum", square < 1e-8, fmt_err(square));
    run.check("counts_divide_group_order", divides);

    double drift = 0;
    auto esl = enumerate_group(field, GroupKind::ESL);
    std::uniform_int_distribution<std::uint64_t> code_dist(0, cs.plane_count() - 1);
    for (int k = 0; k < kSamples; k++) {
        RVector r = cs.plane_representative(cs.decode_plane(code_dist(rng)));
        RVector image = cs.esl_action(pick(esl, rng)) * std::span<const std::uint32_t>(r);
        auto a = hermitian_eigenvalues(h.phase_point_operator(r)).values;
        auto b = hermitian_eigenvalues(h.phase_point_operator(image)).values;
        for (std::size_t j = 0; j < a.size(); j++) {
            drift = std::max(drift, std::abs(a[j] - b[j]));
        }
    }
    run.check("spectrum_group_invariant", drift < 1e-9, fmt_err(drift));

    OrbitSpectrumReport report = orbit_spectrum_consistency(census, orbit_decomposition(cs, GroupKind::ESL));
    run.check("orbit_spectrum_agreement", report.passed(),
              std::to_string(report.spectrum_classes) + " spectra, " + std::to_string(report.orbits) + " orbits");
}

using SuiteFn = std::function<void(std::uint32_t, std::mt19937_64 &, std::vector<VerifyCheck> &)>;

const std::vector<std::pair<std::string, SuiteFn>> &suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"field", field_suite},     {"group", group_suite},   {"hilbert", hilbert_suite},
        {"coords", coords_suite},   {"orbits", orbits_suite}, {"spectra", spectra_suite},
    };
    return table;
}

}  // namespace

const std::vector<std::string> &verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &[name, fn] : suites()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

std::vector<VerifyCheck> run_verify(const std::string &suite, std::uint32_t n, std::uint64_t seed) {
    if (!is_odd_prime(n) || n > 11) {
        throw PpoError(ErrorCode::InvalidModulus, "verify needs an odd prime N <= 11");
    }
    std::vector<VerifyCheck> out;
    bool found = false;
    for (const auto &[name, fn] : suites()) {
        if (suite == "all" || suite == name) {
            std::mt19937_64 rng(seed);
            fn(n, rng, out);
            found = true;
        }
    }
    if (!found) {
        throw PpoError(ErrorCode::InvalidArgument, "unknown suite " + suite);
    }
    return out;
}

}  // namespace ppo
