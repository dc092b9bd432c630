#include "folia/algebroid.hpp"

#include "folia/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace folia {

// ---- Section --------------------------------------------------------------

bool Section::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
}

Section& Section::operator+=(const Section& o) {
    if (o.coeffs.empty()) return *this;
    if (coeffs.empty()) {
        level = o.level;
        coeffs = o.coeffs;
        return *this;
    }
    if (level != o.level || coeffs.size() != o.coeffs.size())
        throw std::invalid_argument("adding sections of different levels");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

Section operator*(const Poly& f, const Section& s) {
    Section out{s.level, {}};
    if (f.is_zero()) return out;
    out.coeffs.reserve(s.coeffs.size());
    for (const auto& c : s.coeffs) out.coeffs.push_back(f * c);
    return out;
}

std::string Section::to_string(const LieNAlgebroid& a) const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Poly& c = coeffs[i];
        if (c.is_zero()) continue;
        std::string lab = a.label({level, static_cast<int>(i)});
        std::string term;
        bool negative = false;
        if (c.terms().size() == 1) {
            Rational coef = c.terms().begin()->second;
            negative = coef < 0;
            Poly m = negative ? -c : c;
            term = m.is_constant() && m.constant_term() == 1 ? lab : m.to_string() + "*" + lab;
        } else {
            term = "(" + c.to_string() + ")*" + lab;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// ---- LieNAlgebroid --------------------------------------------------------

LieNAlgebroid::LieNAlgebroid(VarList vars, GradedBundle bundle)
    : vars_(std::move(vars)), bundle_(std::move(bundle)) {
    if (!vars_) throw std::invalid_argument("algebroid needs a variable list");
    if (bundle_.depth() < 1) throw std::invalid_argument("algebroid needs at least one level");
    anchor_.assign(bundle_.rank(0), VectorField(vars_));
    differential_.resize(bundle_.depth());
    for (int i = 1; i < bundle_.depth(); ++i)
        differential_[i].assign(bundle_.rank(i), Section::zero(i - 1));
}

Section LieNAlgebroid::basis(BasisRef b) const {
    if (b.level < 0 || b.level >= depth() || b.index < 0 || b.index >= rank(b.level))
        throw std::out_of_range("basis element out of range");
    Section s{b.level, std::vector<Poly>(rank(b.level), Poly(vars_))};
    s.coeffs[b.index] = Poly(vars_, 1);
    return s;
}

Section LieNAlgebroid::make_section(int level, std::vector<Poly> coeffs) const {
    Section s{level, std::move(coeffs)};
    check_section(s, level);
    for (auto& c : s.coeffs) c = c + Poly(vars_);
    return s;
}

void LieNAlgebroid::check_section(const Section& s, int expected_level) const {
    if (s.level != expected_level)
        throw std::invalid_argument("section at level " + std::to_string(s.level) + ", expected level " +
                                    std::to_string(expected_level));
    if (s.coeffs.empty()) return;
    if (expected_level < 0 || expected_level >= depth())
        throw std::invalid_argument("nonzero section at a level outside the bundle");
    if (static_cast<int>(s.coeffs.size()) != rank(expected_level))
        throw std::invalid_argument("section length does not match rank of level " +
                                    std::to_string(expected_level));
}

void LieNAlgebroid::set_anchor(int index, VectorField x) {
    if (x.dim() != vars_->size()) throw std::invalid_argument("anchor image has wrong dimension");
    anchor_.at(index) = std::move(x);
}

void LieNAlgebroid::set_differential(int level, int index, Section image) {
    if (level < 1 || level >= depth()) throw std::out_of_range("differential source level out of range");
    check_section(image, level - 1);
    differential_[level].at(index) = std::move(image);
}

namespace {

std::pair<int, int> sorted_pair(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

void LieNAlgebroid::declare_l2(int la, int lb) { l2_blocks_.insert(sorted_pair(la, lb)); }
void LieNAlgebroid::declare_l3(int la, int lb, int lc) { l3_blocks_.insert(sorted_triple(la, lb, lc)); }

bool LieNAlgebroid::l2_declared(int la, int lb) const { return l2_blocks_.count(sorted_pair(la, lb)) > 0; }
bool LieNAlgebroid::l3_declared(int la, int lb, int lc) const {
    return l3_blocks_.count(sorted_triple(la, lb, lc)) > 0;
}

bool LieNAlgebroid::l2_known(int la, int lb) const { return la + lb >= depth() || l2_declared(la, lb); }
bool LieNAlgebroid::l3_known(int la, int lb, int lc) const {
    return la + lb + lc + 1 >= depth() || l3_declared(la, lb, lc);
}

void LieNAlgebroid::set_l2(BasisRef a, BasisRef b, Section value) {
    basis(a), basis(b);  // range checks
    const int out = a.level + b.level;
    if (out >= depth()) {
        if (!value.is_zero()) throw std::invalid_argument("l2 value at a level beyond the bundle");
        return;
    }
    check_section(value, out);
    declare_l2(a.level, b.level);
    int sign = 1;
    if (b < a) {
        std::swap(a, b);
        sign = koszul_sign({1, 0}, {b.degree(), a.degree()});
    }
    if (a == b && a.degree() % 2 == 0 && !value.is_zero())
        throw std::invalid_argument("l2 of an element with itself must vanish by antisymmetry: " + label(a));
    Section v = sign == 1 ? std::move(value) : -value;
    if (v.is_zero())
        l2_.erase({a, b});
    else
        l2_[{a, b}] = std::move(v);
}

void LieNAlgebroid::set_l3(BasisRef a, BasisRef b, BasisRef c, Section value) {
    basis(a), basis(b), basis(c);
    const int out = a.level + b.level + c.level + 1;
    if (out >= depth()) {
        if (!value.is_zero()) throw std::invalid_argument("l3 value at a level beyond the bundle");
        return;
    }
    check_section(value, out);
    declare_l3(a.level, b.level, c.level);
    std::vector<BasisRef> refs{a, b, c};
    std::vector<int> sigma{0, 1, 2};
    std::sort(sigma.begin(), sigma.end(), [&](int i, int j) { return refs[i] < refs[j]; });
    const int sign = koszul_sign(sigma, {a.degree(), b.degree(), c.degree()});
    std::array<BasisRef, 3> key{refs[sigma[0]], refs[sigma[1]], refs[sigma[2]]};
    for (int i = 0; i < 2; ++i)
        if (key[i] == key[i + 1] && key[i].degree() % 2 == 0 && !value.is_zero())
            throw std::invalid_argument("l3 with a repeated even element must vanish: " + label(key[i]));
    Section v = sign == 1 ? std::move(value) : -value;
    if (v.is_zero())
        l3_.erase(key);
    else
        l3_[key] = std::move(v);
}

Section LieNAlgebroid::l2(BasisRef a, BasisRef b) const {
    const int out = a.level + b.level;
    if (out >= depth()) return Section::zero(out);
    if (!l2_declared(a.level, b.level))
        throw MissingBracket("l2(" + label(a) + ", " + label(b) + ") is not declared");
    int sign = 1;
    if (b < a) {
        sign = koszul_sign({1, 0}, {a.degree(), b.degree()});
        std::swap(a, b);
    }
    auto it = l2_.find({a, b});
    if (it == l2_.end()) return Section::zero(out);
    return sign == 1 ? it->second : -it->second;
}

Section LieNAlgebroid::l3(BasisRef a, BasisRef b, BasisRef c) const {
    const int out = a.level + b.level + c.level + 1;
    if (out >= depth()) return Section::zero(out);
    if (!l3_declared(a.level, b.level, c.level))
        throw MissingBracket("l3(" + label(a) + ", " + label(b) + ", " + label(c) + ") is not declared");
    std::vector<BasisRef> refs{a, b, c};
    std::vector<int> sigma{0, 1, 2};
    std::sort(sigma.begin(), sigma.end(), [&](int i, int j) { return refs[i] < refs[j]; });
    std::array<BasisRef, 3> key{refs[sigma[0]], refs[sigma[1]], refs[sigma[2]]};
    auto it = l3_.find(key);
    if (it == l3_.end()) return Section::zero(out);
    // stored value is l3(key); l3(a,b,c) = sign * l3(sorted) with the same sign as for wedges
    const int sign = koszul_sign(sigma, {a.degree(), b.degree(), c.degree()});
    return sign == 1 ? it->second : -it->second;
}

VectorField LieNAlgebroid::rho(const Section& s) const {
    VectorField out(vars_);
    if (s.coeffs.empty() || s.level != 0) return out;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        if (!s.coeffs[i].is_zero()) out = out + s.coeffs[i] * anchor_[i];
    return out;
}

Section LieNAlgebroid::l1(const Section& s) const {
    Section out = Section::zero(s.level - 1);
    if (s.coeffs.empty() || s.level == 0) return out;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        if (!s.coeffs[i].is_zero()) out += s.coeffs[i] * differential_[s.level][i];
    return out;
}

Section LieNAlgebroid::l2(const Section& a, const Section& b) const {
    const int out_level = a.level + b.level;
    Section out = Section::zero(out_level);
    if (a.coeffs.empty() || b.coeffs.empty() || out_level >= depth()) return out;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            Section e = l2(BasisRef{a.level, static_cast<int>(i)}, BasisRef{b.level, static_cast<int>(j)});
            if (!e.coeffs.empty()) out += (a.coeffs[i] * b.coeffs[j]) * e;
        }
    }
    if (a.level == 0) {
        VectorField x = rho(a);
        Section t{b.level, {}};
        for (const auto& g : b.coeffs) t.coeffs.push_back(x.apply(g));
        out += t;
    }
    if (b.level == 0) {
        VectorField y = rho(b);
        Section t{a.level, {}};
        for (const auto& f : a.coeffs) t.coeffs.push_back(-y.apply(f));
        out += t;
    }
    return out;
}

Section LieNAlgebroid::l3(const Section& a, const Section& b, const Section& c) const {
    const int out_level = a.level + b.level + c.level + 1;
    Section out = Section::zero(out_level);
    if (a.coeffs.empty() || b.coeffs.empty() || c.coeffs.empty() || out_level >= depth()) return out;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            Poly fg = a.coeffs[i] * b.coeffs[j];
            for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
                if (c.coeffs[k].is_zero()) continue;
                Section e = l3(BasisRef{a.level, static_cast<int>(i)}, BasisRef{b.level, static_cast<int>(j)},
                               BasisRef{c.level, static_cast<int>(k)});
                if (!e.coeffs.empty()) out += (fg * c.coeffs[k]) * e;
            }
        }
    }
    return out;
}

Section LieNAlgebroid::bracket(const std::vector<Section>& args) const {
    switch (args.size()) {
        case 1: return l1(args[0]);
        case 2: return l2(args[0], args[1]);
        case 3: return l3(args[0], args[1], args[2]);
        default: throw std::invalid_argument("only brackets of arity 1, 2, 3 are modelled");
    }
}

std::vector<BasisRef> LieNAlgebroid::basis_refs(int level) const {
    std::vector<BasisRef> out;
    for (int i = 0; i < rank(level); ++i) out.push_back({level, i});
    return out;
}

std::vector<BasisRef> LieNAlgebroid::all_basis_refs() const {
    std::vector<BasisRef> out;
    for (int l = 0; l < depth(); ++l)
        for (int i = 0; i < rank(l); ++i) out.push_back({l, i});
    return out;
}

// ---- Jacobi identities ----------------------------------------------------

JacobiResult jacobi_residual(const LieNAlgebroid& a, const std::vector<BasisRef>& tuple) {
    const int k = static_cast<int>(tuple.size());
    if (k < 1 || k > 3) throw std::invalid_argument("Jacobi identities are checked for k = 1, 2, 3");
    std::vector<int> degrees;
    std::vector<Section> elems;
    int total_level = 0;
    for (const auto& b : tuple) {
        degrees.push_back(b.degree());
        elems.push_back(a.basis(b));
        total_level += b.level;
    }
    Section sum = Section::zero(total_level + k - 3);
    try {
        for (int j = 1; j <= k; ++j) {
            const int outer_sign = (j * (k - j)) % 2 == 0 ? 1 : -1;
            for (const auto& u : unshuffles(j, k)) {
                std::vector<Section> inner_args;
                for (int p : u.first) inner_args.push_back(elems[p]);
                Section inner = a.bracket(inner_args);
                if (inner.coeffs.empty()) continue;
                std::vector<Section> outer_args{inner};
                for (int p : u.second) outer_args.push_back(elems[p]);
                Section term = a.bracket(outer_args);
                if (term.coeffs.empty()) continue;
                const int sign = outer_sign * koszul_sign(u.permutation(), degrees);
                sum += sign == 1 ? term : -term;
            }
        }
    } catch (const MissingBracket& e) {
        return Unchecked{e.what()};
    }
    return sum;
}

VectorField anchor_morphism_check(const LieNAlgebroid& a, BasisRef x, BasisRef y) {
    if (x.level != 0 || y.level != 0) throw std::invalid_argument("anchor check takes degree-0 elements");
    VectorField lhs = a.rho(a.l2(x, y));
    return lhs - lie_bracket(a.anchor(x.index), a.anchor(y.index));
}

namespace {

std::string tuple_name(const LieNAlgebroid& a, const std::vector<BasisRef>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + a.label(t[i]);
    return s + ")";
}

}  // namespace

ComplexReport complex_check(const LieNAlgebroid& a) {
    ComplexReport r;
    for (int l = 1; l < a.depth(); ++l) {
        for (const auto& b : a.basis_refs(l)) {
            Section d = a.l1(a.basis(b));
            if (l >= 2) {
                Section dd = a.l1(d);
                if (!dd.is_zero()) r.failures.push_back({"l1(l1(" + a.label(b) + "))", dd.to_string(a)});
            } else {
                VectorField v = a.rho(d);
                if (!v.is_zero()) r.failures.push_back({"rho(l1(" + a.label(b) + "))", v.to_string()});
            }
        }
    }
    r.pass = r.failures.empty();
    return r;
}

AnchorReport anchor_morphism_sweep(const LieNAlgebroid& a) {
    AnchorReport r;
    if (!a.l2_known(0, 0)) {
        r.unchecked.push_back("block (0, 0)");
        r.pass = false;
        return r;
    }
    auto refs = a.basis_refs(0);
    for (std::size_t i = 0; i < refs.size(); ++i)
        for (std::size_t j = i + 1; j < refs.size(); ++j) {
            VectorField v = anchor_morphism_check(a, refs[i], refs[j]);
            ++r.checked;
            if (!v.is_zero()) r.failures.push_back({tuple_name(a, {refs[i], refs[j]}), v.to_string()});
        }
    r.pass = r.failures.empty();
    return r;
}

namespace {

// Level blocks of the brackets evaluated by the k-th Jacobi identity on a
// tuple with the given levels, as (arity, sorted levels) pairs.
struct BlockNeed {
    int arity;
    std::vector<int> levels;
};

std::vector<BlockNeed> needed_blocks(const std::vector<int>& levels) {
    const int k = static_cast<int>(levels.size());
    std::vector<BlockNeed> out;
    for (int j = 1; j <= k; ++j) {
        for (const auto& u : unshuffles(j, k)) {
            std::vector<int> inner;
            int inner_total = 0;
            for (int p : u.first) {
                inner.push_back(levels[p]);
                inner_total += levels[p];
            }
            if (j == 1 && inner[0] == 0) continue;  // l1 vanishes on E_0
            int inner_out = inner_total + j - 2;
            if (j >= 2) out.push_back({j, inner});
            std::vector<int> outer{inner_out};
            for (int p : u.second) outer.push_back(levels[p]);
            if (outer.size() >= 2) out.push_back({static_cast<int>(outer.size()), outer});
        }
    }
    return out;
}

bool block_known(const LieNAlgebroid& a, const BlockNeed& b, int depth) {
    for (int l : b.levels)
        if (l >= depth) return true;  // an argument that is structurally zero
    if (b.arity == 2) return a.l2_known(b.levels[0], b.levels[1]);
    if (b.arity == 3) return a.l3_known(b.levels[0], b.levels[1], b.levels[2]);
    return true;
}

// Basis tuples on the given levels, non-decreasing in basis order.
std::vector<std::vector<BasisRef>> sorted_tuples(const LieNAlgebroid& a, const std::vector<int>& levels) {
    const int k = static_cast<int>(levels.size());
    std::vector<std::vector<BasisRef>> tuples{{}};
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<BasisRef>> next;
        for (const auto& t : tuples)
            for (const auto& b : a.basis_refs(levels[i])) {
                if (!t.empty() && b < t.back()) continue;
                auto u = t;
                u.push_back(b);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    return tuples;
}

void sweep_tuples(const LieNAlgebroid& a, const std::vector<int>& levels, JacobiReport& r) {
    const int k = static_cast<int>(levels.size());
    for (const auto& t : sorted_tuples(a, levels)) {
        JacobiResult res = jacobi_residual(a, t);
        if (auto* u = std::get_if<Unchecked>(&res)) {
            ++r.unchecked_tuples;
            (void)u;
            continue;
        }
        ++r.checked;
        const Section& s = std::get<Section>(res);
        if (!s.is_zero()) r.failures.push_back({"k=" + std::to_string(k) + " " + tuple_name(a, t), s.to_string(a)});
    }
}

}  // namespace

JacobiReport jacobi_sweep(const LieNAlgebroid& a, int max_arity) {
    JacobiReport r;
    const int depth = a.depth();
    for (int k = 1; k <= std::min(max_arity, 3); ++k) {
        // non-decreasing level sequences of length k whose identity lands in the bundle
        std::vector<std::vector<int>> seqs{{}};
        for (int i = 0; i < k; ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& s : seqs)
                for (int l = s.empty() ? 0 : s.back(); l < depth; ++l) {
                    auto t = s;
                    t.push_back(l);
                    next.push_back(std::move(t));
                }
            seqs = std::move(next);
        }
        for (const auto& levels : seqs) {
            const int total = std::accumulate(levels.begin(), levels.end(), 0);
            const int out = total + k - 3;
            if (out < 0 || out >= depth) continue;
            bool known = true;
            std::string missing;
            for (const auto& need : needed_blocks(levels))
                if (!block_known(a, need, depth)) {
                    known = false;
                    missing = "l" + std::to_string(need.arity) + " block (";
                    for (std::size_t i = 0; i < need.levels.size(); ++i)
                        missing += (i ? ", " : "") + std::to_string(need.levels[i]);
                    missing += ")";
                    break;
                }
            if (!known) {
                std::string name = "k=" + std::to_string(k) + " levels (";
                for (std::size_t i = 0; i < levels.size(); ++i) name += (i ? ", " : "") + std::to_string(levels[i]);
                r.unchecked_blocks.push_back(name + ") needs " + missing);
                r.unchecked_tuples += static_cast<int>(sorted_tuples(a, levels).size());
                continue;
            }
            sweep_tuples(a, levels, r);
        }
    }
    r.pass = r.failures.empty();
    return r;
}

// ---- sliced exactness -----------------------------------------------------

bool SliceReport::exact_at(int level) const {
    for (const auto& e : entries)
        if (e.level == level && !e.exact()) return false;
    return true;
}

bool SliceReport::exact() const {
    return std::all_of(entries.begin(), entries.end(), [](const SliceEntry& e) { return e.exact(); });
}

namespace {

void strip_zeros(SparseRow& row) {
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
}

// Degree of a map given by its images as lists of polynomial components;
// nullopt when every entry is zero.
std::optional<int> map_degree(const std::vector<std::vector<Poly>>& images, const std::string& name) {
    std::optional<int> deg;
    for (const auto& img : images)
        for (const auto& p : img) {
            int d = p.homogeneous_degree();
            if (d == -1) continue;
            if (d == -2 || (deg && *deg != d))
                throw NonHomogeneous(name + " is not homogeneous in the polynomial degree");
            deg = d;
        }
    return deg;
}

// Rank of f(m * e_b) over all basis elements b and monomials m of degree d.
std::size_t slice_rank(const std::vector<std::vector<Poly>>& images, std::size_t nvars, int d) {
    if (d < 0) return 0;
    std::map<std::pair<std::size_t, Exponents>, std::size_t> columns;
    std::vector<SparseRow> rows;
    auto mons = monomials_of_degree(nvars, d);
    for (const auto& img : images) {
        for (const auto& m : mons) {
            SparseRow row;
            for (std::size_t c = 0; c < img.size(); ++c)
                for (const auto& [e, coef] : img[c].terms()) {
                    Exponents sum = e;
                    for (std::size_t v = 0; v < nvars; ++v) sum[v] += m[v];
                    auto [it, ins] = columns.try_emplace({c, sum}, columns.size());
                    row[it->second] += coef;
                }
            strip_zeros(row);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    return rank(columns.size(), rows);
}

std::size_t slice_dim(std::size_t nvars, int rank, int d) {
    if (d < 0) return 0;
    return monomials_of_degree(nvars, d).size() * static_cast<std::size_t>(rank);
}

}  // namespace

SliceReport sliced_exactness(const LieNAlgebroid& a, int bound) {
    const std::size_t n = a.vars()->size();
    const int depth = a.depth();
    // out[i]: images of the basis of level i under its outgoing map
    std::vector<std::vector<std::vector<Poly>>> out(depth);
    for (int i = 0; i < a.rank(0); ++i) {
        std::vector<Poly> comps = a.anchor(i).components();
        for (auto& c : comps) c = c + Poly(a.vars());
        out[0].push_back(std::move(comps));
    }
    for (int l = 1; l < depth; ++l)
        for (int i = 0; i < a.rank(l); ++i) {
            Section s = a.differential(l, i);
            if (s.coeffs.empty()) s.coeffs.assign(a.rank(l - 1), Poly(a.vars()));
            for (auto& c : s.coeffs) c = c + Poly(a.vars());
            out[l].push_back(s.coeffs);
        }
    std::vector<std::optional<int>> deg(depth);
    for (int l = 0; l < depth; ++l)
        deg[l] = map_degree(out[l], l == 0 ? "the anchor" : "l1 on level " + std::to_string(l));

    SliceReport r;
    r.bound = bound;
    for (int l = 0; l < depth; ++l) {
        for (int d = 0; d <= bound; ++d) {
            SliceEntry e;
            e.level = l;
            e.degree = d;
            std::size_t dim = slice_dim(n, a.rank(l), d);
            std::size_t rk = deg[l] ? slice_rank(out[l], n, d) : 0;
            e.kernel_dim = dim - rk;
            if (l + 1 < depth && deg[l + 1]) e.image_dim = slice_rank(out[l + 1], n, d - *deg[l + 1]);
            r.entries.push_back(e);
        }
    }
    return r;
}

// ---- forms ------------------------------------------------------------------

Poly EOneForm::operator()(const Section& s) const {
    Poly out = Poly::constant(0);
    if (s.level != 0) return out;
    for (std::size_t i = 0; i < s.coeffs.size() && i < values.size(); ++i) out += s.coeffs[i] * values[i];
    return out;
}

EOneForm d_function(const LieNAlgebroid& a, const Poly& f) {
    EOneForm out;
    for (int i = 0; i < a.rank(0); ++i) out.values.push_back(a.anchor(i).apply(f));
    return out;
}

std::vector<Poly> d0_on_oneform(const LieNAlgebroid& a, const EOneForm& theta) {
    std::vector<Poly> out;
    if (a.depth() < 2) return out;
    for (int i = 0; i < a.rank(1); ++i) out.push_back(theta(a.differential(1, i)) + Poly(a.vars()));
    return out;
}

Poly d1_on_oneform(const LieNAlgebroid& a, const EOneForm& theta, BasisRef x, BasisRef y) {
    if (x.level != 0 || y.level != 0) throw std::invalid_argument("d1 takes degree-0 elements");
    const Poly& tx = theta.values.at(x.index);
    const Poly& ty = theta.values.at(y.index);
    return a.anchor(x.index).apply(ty) - a.anchor(y.index).apply(tx) - theta(a.l2(x, y)) + Poly(a.vars());
}

std::optional<Section> lift_vector_field(const LieNAlgebroid& a, const VectorField& x, int bound) {
    const std::size_t n = a.vars()->size();
    const int r0 = a.rank(0);
    VectorField target(a.vars());
    target = target + x;
    for (int d = 0; d <= bound; ++d) {
        auto mons = monomials_up_to(n, d);
        // unknowns: (basis i, monomial m); equations: (component c, exponent e)
        std::map<std::pair<std::size_t, Exponents>, std::size_t> eq_index;
        std::vector<SparseRow> rows;
        std::vector<Rational> rhs;
        auto eq = [&](std::size_t c, const Exponents& e) {
            auto [it, ins] = eq_index.try_emplace({c, e}, rows.size());
            if (ins) {
                rows.emplace_back();
                rhs.emplace_back(0);
            }
            return it->second;
        };
        for (int i = 0; i < r0; ++i)
            for (std::size_t mi = 0; mi < mons.size(); ++mi) {
                const std::size_t col = static_cast<std::size_t>(i) * mons.size() + mi;
                const auto& comps = a.anchor(i).components();
                for (std::size_t c = 0; c < comps.size(); ++c)
                    for (const auto& [e, coef] : comps[c].terms()) {
                        Exponents s = e;
                        for (std::size_t v = 0; v < n; ++v) s[v] += mons[mi][v];
                        rows[eq(c, s)][col] += coef;
                    }
            }
        for (std::size_t c = 0; c < target.dim(); ++c)
            for (const auto& [e, coef] : target[c].terms()) rhs[eq(c, e)] += coef;
        for (auto& row : rows) strip_zeros(row);
        auto sol = solve(static_cast<std::size_t>(r0) * mons.size(), rows, rhs);
        if (!sol) continue;
        Section s{0, std::vector<Poly>(r0, Poly(a.vars()))};
        for (int i = 0; i < r0; ++i)
            for (std::size_t mi = 0; mi < mons.size(); ++mi) {
                const Rational& v = (*sol)[static_cast<std::size_t>(i) * mons.size() + mi];
                if (v != 0) s.coeffs[i].add_term(mons[mi], v);
            }
        return s;
    }
    return std::nullopt;
}

}  // namespace folia
