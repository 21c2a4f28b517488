#include "spinres/clifford/clifford.hpp"

#include "spinres/errors.hpp"
#include "spinres/parallel.hpp"
#include "spinres/resfam/resfam.hpp"

#include <cstdio>

namespace spinres::clifford {

using op::OpMonomial;
using op::OpPoly;

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = GaussianRational(1);
    return m;
}

bool CMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(const GaussianRational& s) {
    for (auto& v : data_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t k = 0; k < a.dim_; ++k) {
            const GaussianRational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) {
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        }
    }
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.dim_ * b.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t j = 0; j < a.dim_; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.dim_; ++k) {
                for (std::size_t l = 0; l < b.dim_; ++l) r(i * b.dim_ + k, j * b.dim_ + l) = a(i, j) * b(k, l);
            }
        }
    }
    return r;
}

std::string CMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        s += i ? ";" : "";
        for (std::size_t j = 0; j < dim_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
    }
    return s + "]";
}

namespace {

CMatrix pauli(int k) {
    CMatrix m(2);
    const GaussianRational one(1), i = GaussianRational::i();
    if (k == 1) {
        m(0, 1) = one;
        m(1, 0) = one;
    } else if (k == 2) {
        m(0, 1) = -i;
        m(1, 0) = i;
    } else {
        m(0, 0) = one;
        m(1, 1) = -one;
    }
    return m;
}

CMatrix tensor(const std::vector<CMatrix>& factors) {
    CMatrix r = CMatrix::identity(1);
    for (const auto& f : factors) r = kron(r, f);
    return r;
}

}  // namespace

CliffordRep CliffordRep::build(unsigned p, unsigned q) {
    if (p + q < 1) throw UsageError("Clifford algebra needs p + q >= 1");
    CliffordRep rep;
    rep.p_ = p;
    rep.q_ = q;
    const unsigned n = p + q, m = n / 2;
    rep.dim_ = std::size_t{1} << m;
    // Hermitian gammas with gamma^2 = 1.
    std::vector<CMatrix> gammas;
    for (unsigned k = 0; k < m; ++k) {
        for (int which : {1, 2}) {
            std::vector<CMatrix> f(k, pauli(3));
            f.push_back(pauli(which));
            for (unsigned r = k + 1; r < m; ++r) f.push_back(CMatrix::identity(2));
            gammas.push_back(tensor(f));
        }
    }
    if (n % 2 == 1) gammas.push_back(tensor(std::vector<CMatrix>(m, pauli(3))));
    for (unsigned k = 0; k < n; ++k) {
        rep.gens_.push_back(k < p ? gammas[k] : gammas[k] * GaussianRational::i());
    }
    return rep;
}

std::string CliffordRep::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    feed(std::to_string(p_) + "," + std::to_string(q_) + ";");
    for (const auto& g : gens_) feed(g.to_string());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CMatrix CliffordRep::volume() const {
    CMatrix v = CMatrix::identity(dim_);
    for (const auto& g : gens_) v = v * g;
    return v;
}

bool PolySpinorField::is_zero() const {
    for (const auto& c : comp) {
        if (!c.is_zero()) return false;
    }
    return true;
}

PolySpinorField& PolySpinorField::operator+=(const PolySpinorField& o) {
    if (comp.size() != o.comp.size()) throw UsageError("spinor component count mismatch");
    for (std::size_t k = 0; k < comp.size(); ++k) comp[k] += o.comp[k];
    return *this;
}

PolySpinorField zero_field(std::size_t dim) { return PolySpinorField{std::vector<MultiPoly>(dim)}; }

PolySpinorField apply(const CMatrix& m, const PolySpinorField& f) {
    if (m.dim() != f.comp.size()) throw UsageError("matrix and spinor dimensions differ");
    PolySpinorField r = zero_field(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (m(i, j).is_zero() || f.comp[j].is_zero()) continue;
            r.comp[i] += MultiPoly(m(i, j)) * f.comp[j];
        }
    }
    return r;
}

PolySpinorField scale(const GaussianRational& s, const PolySpinorField& f) {
    PolySpinorField r = f;
    for (auto& c : r.comp) c *= s;
    return r;
}

PolySpinorField random_field(Rng& rng, std::size_t dim, unsigned vars, unsigned degree, unsigned terms) {
    auto coeff = [&] {
        return GaussianRational(rng.rational(6, 4), rng.coin() ? Rational(0) : rng.rational(3, 3));
    };
    PolySpinorField f = zero_field(dim);
    if (terms == 0) {
        // Every monomial of degree <= degree, enumerated by odometer.
        std::vector<unsigned> e(vars, 0);
        for (auto& c : f.comp) {
            std::fill(e.begin(), e.end(), 0);
            while (true) {
                unsigned total = 0;
                for (unsigned v : e) total += v;
                if (total <= degree) {
                    MultiPoly mono(1);
                    for (unsigned v = 0; v < vars; ++v) mono *= MultiPoly::variable(sym::x(v + 1)).pow(e[v]);
                    c += MultiPoly(coeff()) * mono;
                }
                unsigned k = 0;
                while (k < vars && ++e[k] > degree) e[k++] = 0;
                if (k == vars) break;
            }
        }
        return f;
    }
    for (auto& c : f.comp) {
        for (unsigned t = 0; t < terms; ++t) {
            auto total = static_cast<unsigned>(rng.uniform(0, degree));
            MultiPoly mono(1);
            for (unsigned s = 0; s < total; ++s) {
                mono *= MultiPoly::variable(sym::x(static_cast<unsigned>(rng.uniform(1, vars))));
            }
            c += MultiPoly(coeff()) * mono;
        }
    }
    return f;
}

PolySpinorField Realizer::d_t(const PolySpinorField& f) const {
    PolySpinorField r = zero_field(rep_.spinor_dim());
    for (unsigned i = 1; i < rep_.n(); ++i) {
        PolySpinorField d = f;
        for (auto& c : d.comp) c = c.derivative(sym::x(i));
        if (!d.is_zero()) r += clifford::apply(rep_.e(i), d);
    }
    return r;
}

PolySpinorField Realizer::d_n(const PolySpinorField& f) const {
    PolySpinorField d = f;
    for (auto& c : d.comp) c = c.derivative(sym::x(rep_.n()));
    return clifford::apply(rep_.e(rep_.n()), d);
}

PolySpinorField Realizer::restrict(const PolySpinorField& f) const {
    PolySpinorField r = f;
    for (auto& c : r.comp) c = c.substitute(sym::x(rep_.n()), GaussianRational(0));
    return r;
}

PolySpinorField Realizer::e_n(const PolySpinorField& f) const { return clifford::apply(rep_.e(rep_.n()), f); }

PolySpinorField Realizer::apply(const OpMonomial& m, const PolySpinorField& f) const {
    PolySpinorField r = f;
    for (unsigned k = 0; k < m.b && !r.is_zero(); ++k) r = d_n(r);
    if (m.restricted) r = restrict(r);
    for (unsigned k = 0; k < m.a && !r.is_zero(); ++k) r = d_t(r);
    if (m.eps) r = e_n(r);
    return r;
}

PolySpinorField Realizer::apply(const OpPoly& a, const PolySpinorField& f,
                                const std::map<Symbol, GaussianRational>& values) const {
    std::map<Symbol, GaussianRational> at = values;
    at.emplace(sym::n(), GaussianRational(static_cast<long>(rep_.n())));
    PolySpinorField r = zero_field(rep_.spinor_dim());
    // Share D_N^b f between terms.
    std::map<unsigned, PolySpinorField> normal;
    for (const auto& [m, c] : a.terms()) {
        GaussianRational value;
        try {
            value = c.evaluate(at);
        } catch (const EvaluationAtPole&) {
            throw EvaluationAtPole(c.to_string() + " (coefficient of " + op::to_string(m) + ")");
        }
        auto it = normal.find(m.b);
        if (it == normal.end()) {
            PolySpinorField g = f;
            for (unsigned k = 0; k < m.b && !g.is_zero(); ++k) g = d_n(g);
            it = normal.emplace(m.b, std::move(g)).first;
        }
        PolySpinorField g = it->second;
        if (m.restricted) g = restrict(g);
        for (unsigned k = 0; k < m.a && !g.is_zero(); ++k) g = d_t(g);
        if (m.eps) g = e_n(g);
        r += scale(value, g);
    }
    return r;
}

CheckReport check_defining_relations(const CliffordRep& rep) {
    CheckReport r{"clifford-relations"};
    const CMatrix id = CMatrix::identity(rep.spinor_dim());
    for (unsigned i = 1; i <= rep.n(); ++i) {
        for (unsigned j = i; j <= rep.n(); ++j) {
            const CMatrix anti = rep.e(i) * rep.e(j) + rep.e(j) * rep.e(i);
            // -2 eps_i delta_ij with eps_i = -1 for i <= p.
            const CMatrix expected = (i == j) ? id * GaussianRational(2L * rep.square(i)) : CMatrix(rep.spinor_dim());
            r.record("i=" + std::to_string(i) + ",j=" + std::to_string(j), anti == expected,
                     [&] { return "anticommutator " + anti.to_string(); });
        }
    }
    r.info["signature"] = {rep.p(), rep.q()};
    r.info["spinor_dim"] = rep.spinor_dim();
    r.info["fingerprint"] = rep.fingerprint();
    if (rep.n() % 2 == 1) r.info["volume_element"] = rep.volume()(0, 0).to_string();
    return r;
}

namespace {

OpPoly random_op(Rng& rng, bool restricted, bool allow_normal) {
    const MultiPoly L = MultiPoly::variable(sym::lambda()), N = MultiPoly::variable(sym::n());
    OpPoly p;
    const auto terms = rng.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        OpMonomial m{static_cast<unsigned>(rng.uniform(0, 1)), static_cast<unsigned>(rng.uniform(0, 2)),
                     allow_normal ? static_cast<unsigned>(rng.uniform(0, 2)) : 0u, restricted};
        const MultiPoly c = MultiPoly(rng.rational(5, 3)) + MultiPoly(rng.rational(3, 2)) * L +
                            MultiPoly(rng.rational(3, 2)) * N;
        p += OpPoly(m, RationalFunction(c));
    }
    return p;
}

}  // namespace

CheckReport check_realization_consistency(const CliffordRep& rep, unsigned pairs, unsigned degree,
                                          std::uint64_t seed) {
    Rng rng(seed);
    const Realizer real(rep);
    CheckReport r{"realization-homomorphism"};
    for (unsigned s = 0; s < pairs; ++s) {
        OpPoly A, B;
        if (s == 0) {
            A = B = OpPoly::e_n();
        } else {
            const bool b_restricted = rng.uniform(0, 3) == 0;
            const bool a_restricted = !b_restricted && rng.coin();
            B = random_op(rng, b_restricted, true);
            A = random_op(rng, a_restricted, !b_restricted);
        }
        const std::map<Symbol, GaussianRational> at{{sym::lambda(), GaussianRational(rng.rational(9, 4))}};
        const PolySpinorField psi = random_field(rng, rep.spinor_dim(), rep.n(), degree);
        const PolySpinorField lhs = real.apply(A * B, psi, at);
        const PolySpinorField rhs = real.apply(A, real.apply(B, psi, at), at);
        r.record("pair=" + std::to_string(s), lhs == rhs,
                 [&] { return "A=" + A.to_string() + "; B=" + B.to_string(); });
    }
    r.info["seed"] = seed;
    r.info["field_degree"] = degree;
    return r;
}

CheckReport check_factorization_realizations(const CliffordRep& rep, unsigned order_max, unsigned fields,
                                             unsigned degree, std::uint64_t seed, unsigned jobs) {
    std::vector<resfam::FactorizationInstance> instances;
    for (auto& inst : resfam::example_factorizations()) {
        inst.key = "example," + inst.key;
        instances.push_back(std::move(inst));
    }
    if (order_max >= 2) {
        for (auto& inst : resfam::left_factorization_instances(order_max)) {
            inst.key = "left," + inst.key;
            instances.push_back(std::move(inst));
        }
        for (auto& inst : resfam::right_factorization_instances(order_max)) {
            inst.key = "right," + inst.key;
            instances.push_back(std::move(inst));
        }
    }
    const unsigned m = rep.n() - 1;
    for (auto& inst : instances) {
        inst.lhs = resfam::at_boundary_dim(inst.lhs, m);
        inst.rhs = resfam::at_boundary_dim(inst.rhs, m);
    }
    Rng rng(seed);
    std::vector<PolySpinorField> psi;
    for (unsigned k = 0; k < fields; ++k) psi.push_back(random_field(rng, rep.spinor_dim(), rep.n(), degree));
    const Realizer real(rep);
    const std::size_t count = instances.size() * psi.size();
    std::vector<char> ok(count);
    parallel_for(count, jobs, [&](std::size_t k) {
        const auto& inst = instances[k / psi.size()];
        const auto& f = psi[k % psi.size()];
        ok[k] = real.apply(inst.lhs, f) == real.apply(inst.rhs, f);
    });
    CheckReport r{"factorization-realizations"};
    for (std::size_t k = 0; k < count; ++k) {
        r.record(instances[k / psi.size()].key + ",field=" + std::to_string(k % psi.size()), ok[k] != 0);
    }
    r.info["ambient_dim"] = rep.n();
    r.info["fields"] = fields;
    r.info["field_degree"] = degree;
    r.info["seed"] = seed;
    return r;
}

namespace {

// Rank over Q(i) by Gaussian elimination on dense rows.
std::size_t rank(std::vector<std::vector<GaussianRational>> rows) {
    std::size_t rk = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        const GaussianRational inv = rows[rk][c].inverse();
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const GaussianRational f = rows[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rk][j];
        }
        ++rk;
    }
    return rk;
}

}  // namespace

CheckReport check_separating_family(const CliffordRep& rep, unsigned a_max, unsigned b_max, unsigned fields,
                                    std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Symbol> coords;
    for (unsigned i = 1; i <= rep.n(); ++i) coords.push_back(sym::x(i));
    std::vector<PolySpinorField> psi;
    for (unsigned k = 0; k < fields; ++k) {
        psi.push_back(random_field(rng, rep.spinor_dim(), rep.n(), a_max + b_max, 0));
    }
    const Realizer real(rep);
    std::vector<OpMonomial> monos;
    for (unsigned eps = 0; eps <= 1; ++eps) {
        for (unsigned a = 0; a <= a_max; ++a) {
            for (unsigned b = 0; b <= b_max; ++b) monos.push_back({eps, a, b, true});
        }
    }
    // Column index: (field, component, exponent vector).
    std::map<std::tuple<std::size_t, std::size_t, Exponents>, std::size_t> column;
    std::vector<std::map<std::size_t, GaussianRational>> sparse(monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r) {
        for (std::size_t k = 0; k < psi.size(); ++k) {
            const PolySpinorField img = real.apply(monos[r], psi[k]);
            for (std::size_t c = 0; c < img.comp.size(); ++c) {
                for (const auto& [e, v] : img.comp[c].terms_over(coords)) {
                    auto [it, fresh] = column.emplace(std::make_tuple(k, c, e), column.size());
                    sparse[r][it->second] = v;
                }
            }
        }
    }
    std::vector<std::vector<GaussianRational>> rows(monos.size(), std::vector<GaussianRational>(column.size()));
    for (std::size_t r = 0; r < monos.size(); ++r) {
        for (const auto& [c, v] : sparse[r]) rows[r][c] = v;
    }
    CheckReport out{"separating-family"};
    const std::size_t rk = rank(rows);
    out.record("a<=" + std::to_string(a_max) + ",b<=" + std::to_string(b_max), rk == monos.size(), [&] {
        return "rank " + std::to_string(rk) + " of " + std::to_string(monos.size()) + " monomials";
    });
    out.info["monomials"] = monos.size();
    out.info["rank"] = rk;
    return out;
}

std::pair<CMatrix, CMatrix> signature_projectors(const CliffordRep& rep) {
    const CMatrix id = CMatrix::identity(rep.spinor_dim());
    const CMatrix& en = rep.e(rep.n());
    const GaussianRational half(make_rational(1, 2)), i = GaussianRational::i();
    const GaussianRational cp = pow(i, rep.p() + 1), cm = pow(-i, rep.p() + 1);
    return {(id - en * cp) * half, (id - en * cm) * half};
}

CheckReport check_signature_projectors(const CliffordRep& rep) {
    const auto [pp, pm] = signature_projectors(rep);
    const CMatrix id = CMatrix::identity(rep.spinor_dim());
    const CMatrix& en = rep.e(rep.n());
    const GaussianRational i = GaussianRational::i();
    const GaussianRational cp = pow(i, rep.p() + 1), cm = pow(-i, rep.p() + 1);
    CheckReport r{"signature-projectors"};
    r.record("P+^2=P+", pp * pp == pp, [&] { return "P+^2 - P+ = " + (pp * pp - pp).to_string(); });
    r.record("P-^2=P-", pm * pm == pm, [&] { return "P-^2 - P- = " + (pm * pm - pm).to_string(); });
    r.record("P+P-=0", (pp * pm).is_zero(), [&] { return "P+P- = " + (pp * pm).to_string(); });
    r.record("P+ + P- = Id", pp + pm == id);
    r.record("e_n P+ = (+i)^(p+1) P+", en * pp == pp * cp, [&] { return "differs"; });
    r.record("e_n P- = (-i)^(p+1) P-", en * pm == pm * cm, [&] { return "differs"; });
    r.info["p"] = rep.p();
    return r;
}

EigenResult eigen_recurrence_for(const CliffordRep& rep, const Rational& lambda, unsigned K,
                                 const std::vector<PolySpinorField>& boundary_fields) {
    if (K < 1) throw UsageError("eigen recurrence needs order K >= 1");
    if (lambda.get_den() == 2 && sgn(lambda) < 0) {
        throw PreconditionViolation("lambda = " + to_string(lambda) + " lies in -N + 1/2");
    }
    if (rep.p() != 0) throw UsageError("the eigen recurrence is implemented for Riemannian signature only");
    const Realizer real(rep);
    const GaussianRational lam(lambda), i = GaussianRational::i();
    const std::map<Symbol, GaussianRational> at{{sym::lambda(), lam}};
    const CMatrix p_plus = signature_projectors(rep).first;
    EigenResult out{CheckReport{"eigen-recurrence"}, {}};
    std::vector<OpPoly> solution;
    for (unsigned j = 0; j <= K; ++j) solution.push_back(resfam::solution_op_flat(j));
    for (std::size_t k = 0; k < boundary_fields.size(); ++k) {
        const PolySpinorField psi0 = apply(p_plus, boundary_fields[k]);
        std::vector<PolySpinorField> psi;
        for (unsigned j = 0; j <= K; ++j) psi.push_back(real.apply(solution[j], psi0, at));
        for (unsigned j = 0; j <= K; ++j) {
            PolySpinorField residual = scale(lam + GaussianRational(static_cast<long>(j)), real.e_n(psi[j]));
            residual += scale(-i * lam, psi[j]);
            if (j > 0) residual += real.d_t(psi[j - 1]);
            const std::string key = "field=" + std::to_string(k) + ",j=" + std::to_string(j);
            out.report.record(key + ",grade", residual.is_zero(), [&] { return std::string("nonzero grade residual"); });
            const GaussianRational eig = (j % 2 == 0) ? i : -i;
            out.report.record(key + ",parity", real.e_n(psi[j]) == scale(eig, psi[j]),
                              [&] { return std::string("wrong e_n eigenspace"); });
        }
        out.grades.push_back(std::move(psi));
    }
    out.report.info["lambda"] = to_string(lambda);
    out.report.info["order"] = K;
    out.report.info["boundary_dim"] = rep.n() - 1;
    out.report.info["fingerprint"] = rep.fingerprint();
    return out;
}

EigenResult eigen_recurrence_check(unsigned boundary_dim, const Rational& lambda, unsigned K, unsigned fields,
                                   unsigned degree, std::uint64_t seed) {
    if (boundary_dim < 1) throw UsageError("boundary dimension must be >= 1");
    const CliffordRep rep = CliffordRep::build(0, boundary_dim + 1);
    Rng rng(seed);
    std::vector<PolySpinorField> phi;
    for (unsigned k = 0; k < fields; ++k) phi.push_back(random_field(rng, rep.spinor_dim(), boundary_dim, degree));
    auto out = eigen_recurrence_for(rep, lambda, K, phi);
    out.report.info["seed"] = seed;
    out.report.info["field_degree"] = degree;
    return out;
}

}  // namespace spinres::clifford
