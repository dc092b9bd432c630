#include "folia/io.hpp"

#include "folia/builders.hpp"
#include "folia/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace folia {

namespace {

struct Line {
    std::size_t no;
    std::size_t col;  // 1-based column where `text` starts
    std::string text;
};

struct Block {
    std::string name;
    std::size_t no;
    std::vector<Line> lines;
};

std::pair<std::size_t, std::size_t> trim_range(const std::string& s, std::size_t b, std::size_t e) {
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return {b, e};
}

Line sub(const Line& l, std::size_t b, std::size_t e) {
    auto [tb, te] = trim_range(l.text, b, e);
    return Line{l.no, l.col + tb, l.text.substr(tb, te - tb)};
}

std::vector<Block> split_blocks(const std::string& text) {
    std::vector<Block> blocks;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line l = sub(Line{no, 1, raw}, 0, raw.size());
        if (l.text.empty()) continue;
        if (l.text.front() == '[') {
            if (l.text.back() != ']') throw PresentationError("unterminated section header", no, l.col);
            std::string name = l.text.substr(1, l.text.size() - 2);
            auto [b, e] = trim_range(name, 0, name.size());
            blocks.push_back(Block{name.substr(b, e - b), no, {}});
            continue;
        }
        if (blocks.empty()) throw PresentationError("content before the first section header", no, l.col);
        blocks.back().lines.push_back(l);
    }
    return blocks;
}

// Split at top-level occurrences of `sep` (outside parentheses).
std::vector<Line> split_top(const Line& l, char sep) {
    std::vector<Line> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= l.text.size(); ++i) {
        char c = i < l.text.size() ? l.text[i] : sep;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(sub(l, start, i));
            start = i + 1;
        }
    }
    return out;
}

std::pair<Line, Line> split_key(const Line& l, char sep = ':') {
    auto p = l.text.find(sep);
    if (p == std::string::npos)
        throw PresentationError(std::string("expected '") + sep + "'", l.no, l.col + l.text.size());
    return {sub(l, 0, p), sub(l, p + 1, l.text.size())};
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

template <class F>
auto located(const Line& l, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw PresentationError(e.what(), l.no, l.col + e.column() - 1);
    } catch (const PresentationError&) {
        throw;
    } catch (const std::exception& e) {
        throw PresentationError(e.what(), l.no, l.col);
    }
}

int parse_int(const Line& l) {
    return located(l, [&] {
        if (l.text.empty() || !std::all_of(l.text.begin(), l.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a non-negative integer", 1);
        return std::stoi(l.text);
    });
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

// Section parsing: a polynomial in vars + labels, linear in the labels.
class SectionReader {
public:
    SectionReader(const VarList& vars, const GradedBundle& bundle) : vars_(vars) {
        std::vector<std::string> names = *vars;
        for (int l = 0; l < bundle.depth(); ++l)
            for (int i = 0; i < bundle.rank(l); ++i) {
                names.push_back(bundle.label(l, i));
                refs_.push_back({l, i});
            }
        ext_ = make_vars(names);
        ranks_ = bundle.ranks();
    }

    Section read(const Line& l, int level) const {
        return located(l, [&] {
            Poly p = parse_poly(l.text, ext_);
            const std::size_t n = vars_->size();
            Section s{level, {}};
            if (p.is_zero()) return s;
            if (level < 0 || level >= static_cast<int>(ranks_.size()))
                throw ParseError("nonzero value at level " + std::to_string(level) + ", outside the bundle", 1);
            s.coeffs.assign(ranks_[level], Poly(vars_));
            for (const auto& [e, c] : p.terms()) {
                int found = -1, total = 0;
                for (std::size_t k = n; k < e.size(); ++k)
                    if (e[k]) {
                        total += e[k];
                        found = static_cast<int>(k - n);
                    }
                if (total != 1) throw ParseError("expression is not linear in the basis labels", 1);
                const BasisRef r = refs_[found];
                if (r.level != level)
                    throw ParseError("label " + (*ext_)[n + found] + " is at level " + std::to_string(r.level) +
                                         ", expected level " + std::to_string(level),
                                     1);
                Exponents ve(e.begin(), e.begin() + static_cast<long>(n));
                s.coeffs[r.index].add_term(ve, c);
            }
            return s;
        });
    }

private:
    VarList vars_;
    VarList ext_;
    std::vector<BasisRef> refs_;
    std::vector<int> ranks_;
};

BasisRef find_label(const GradedBundle& b, const Line& l) {
    auto r = b.find(l.text);
    if (!r) throw PresentationError("unknown basis label '" + l.text + "'", l.no, l.col);
    return {r->first, r->second};
}

std::string block_levels(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string point_string(const std::vector<Rational>& p) {
    std::vector<std::string> xs;
    for (const auto& q : p) xs.push_back(rational_to_string(q));
    return join(xs);
}

Json point_json(const std::vector<Rational>& p) {
    Json a = Json::array();
    for (const auto& q : p) a.push_back(rational_to_string(q));
    return a;
}

void require_single_line(const Block& b) {
    if (b.lines.size() != 1)
        throw PresentationError("section [" + b.name + "] needs exactly one line", b.no, 1);
}

std::map<std::string, Line> parse_options(const Block& b) {
    std::map<std::string, Line> out;
    for (const auto& l : b.lines) {
        auto [k, v] = split_key(l, '=');
        out.emplace(k.text, v);
    }
    return out;
}

}  // namespace

// ---- algebroid files ----------------------------------------------------------

PresentationFile parse_presentation(const std::string& text, const std::string& name) {
    auto blocks = split_blocks(text);
    std::map<std::string, const Block*> by_name;
    for (const auto& b : blocks) {
        static const std::vector<std::string> known = {"variables", "ranks", "labels",  "anchor",      "differential",
                                                       "bracket2",  "bracket3", "declared", "witness", "locus",
                                                       "obstruction", "options"};
        if (std::find(known.begin(), known.end(), b.name) == known.end())
            throw PresentationError("unknown section [" + b.name + "]", b.no, 1);
        if (!by_name.emplace(b.name, &b).second) throw PresentationError("repeated section [" + b.name + "]", b.no, 1);
    }
    auto need = [&](const std::string& s) -> const Block& {
        auto it = by_name.find(s);
        if (it == by_name.end()) throw PresentationError("missing section [" + s + "]", 1, 1);
        return *it->second;
    };

    const Block& vb = need("variables");
    require_single_line(vb);
    std::vector<std::string> names;
    for (const auto& p : split_top(vb.lines[0], ',')) {
        if (!is_identifier(p.text) || p.text == "ln" || p.text == "log" || p.text == "sqrt")
            throw PresentationError("invalid variable name '" + p.text + "'", p.no, p.col);
        if (std::find(names.begin(), names.end(), p.text) != names.end())
            throw PresentationError("repeated variable '" + p.text + "'", p.no, p.col);
        names.push_back(p.text);
    }
    VarList vars = make_vars(names);

    const Block& rb = need("ranks");
    require_single_line(rb);
    std::vector<int> ranks;
    for (const auto& p : split_top(rb.lines[0], ',')) {
        int r = parse_int(p);
        if (r <= 0) throw PresentationError("ranks must be positive", p.no, p.col);
        ranks.push_back(r);
    }

    std::vector<std::vector<std::string>> labels(ranks.size());
    for (std::size_t l = 0; l < ranks.size(); ++l)
        for (int i = 0; i < ranks[l]; ++i) labels[l].push_back("e" + std::to_string(l) + "_" + std::to_string(i + 1));
    if (auto it = by_name.find("labels"); it != by_name.end()) {
        for (const auto& line : it->second->lines) {
            auto [k, v] = split_key(line);
            int level = parse_int(k);
            if (level >= static_cast<int>(ranks.size())) throw PresentationError("level out of range", k.no, k.col);
            auto parts = split_top(v, ',');
            if (static_cast<int>(parts.size()) != ranks[level])
                throw PresentationError("level " + std::to_string(level) + " needs " + std::to_string(ranks[level]) +
                                            " labels",
                                        v.no, v.col);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const auto& p = parts[i];
                if (!is_identifier(p.text) || p.text == "ln" || p.text == "log" || p.text == "sqrt")
                    throw PresentationError("invalid label '" + p.text + "'", p.no, p.col);
                if (std::find(names.begin(), names.end(), p.text) != names.end())
                    throw PresentationError("label '" + p.text + "' clashes with a variable", p.no, p.col);
                labels[level][i] = p.text;
            }
        }
    }
    GradedBundle bundle = [&] {
        try {
            return GradedBundle(ranks, labels);
        } catch (const std::exception& e) {
            throw PresentationError(e.what(), rb.no, 1);
        }
    }();
    LieNAlgebroid A(vars, bundle);
    SectionReader reader(vars, bundle);

    if (auto it = by_name.find("anchor"); it != by_name.end())
        for (const auto& line : it->second->lines) {
            auto [k, v] = split_key(line);
            BasisRef r = find_label(bundle, k);
            if (r.level != 0) throw PresentationError("anchor is defined on level 0 only", k.no, k.col);
            auto parts = split_top(v, ',');
            if (parts.size() != names.size())
                throw PresentationError("anchor needs one component per variable", v.no, v.col);
            std::vector<Poly> comps;
            for (const auto& p : parts) comps.push_back(located(p, [&] { return parse_poly(p.text, vars); }));
            A.set_anchor(r.index, VectorField(vars, comps));
        }
    if (auto it = by_name.find("differential"); it != by_name.end())
        for (const auto& line : it->second->lines) {
            auto [k, v] = split_key(line);
            BasisRef r = find_label(bundle, k);
            if (r.level == 0) throw PresentationError("l1 vanishes on level 0", k.no, k.col);
            A.set_differential(r.level, r.index, reader.read(v, r.level - 1));
        }
    if (auto it = by_name.find("declared"); it != by_name.end())
        for (const auto& line : it->second->lines) {
            auto [k, v] = split_key(line);
            std::istringstream ls(v.text);
            std::vector<int> lv;
            int x;
            while (ls >> x) lv.push_back(x);
            if (!ls.eof() || std::any_of(lv.begin(), lv.end(), [&](int q) { return q < 0 || q >= static_cast<int>(ranks.size()); }))
                throw PresentationError("expected levels of the bundle", v.no, v.col);
            if (k.text == "l2" && lv.size() == 2)
                A.declare_l2(lv[0], lv[1]);
            else if (k.text == "l3" && lv.size() == 3)
                A.declare_l3(lv[0], lv[1], lv[2]);
            else
                throw PresentationError("expected 'l2: a b' or 'l3: a b c'", k.no, k.col);
        }
    for (int arity : {2, 3}) {
        auto it = by_name.find("bracket" + std::to_string(arity));
        if (it == by_name.end()) continue;
        for (const auto& line : it->second->lines) {
            auto [k, v] = split_key(line);
            auto args = split_top(k, ',');
            if (static_cast<int>(args.size()) != arity)
                throw PresentationError("expected " + std::to_string(arity) + " labels", k.no, k.col);
            std::vector<BasisRef> refs;
            int total = 0;
            for (const auto& a : args) {
                refs.push_back(find_label(bundle, a));
                total += refs.back().level;
            }
            Section s = reader.read(v, total + arity - 2);
            located(line, [&] {
                if (arity == 2)
                    A.set_l2(refs[0], refs[1], s);
                else
                    A.set_l3(refs[0], refs[1], refs[2], s);
                return 0;
            });
        }
    }

    PresentationFile f{name, std::move(A), {}, {}, {}, {}, {}};
    if (auto it = by_name.find("witness"); it != by_name.end()) {
        require_single_line(*it->second);
        const Line& l = it->second->lines[0];
        located(l, [&] { return parse_ratlog(l.text, vars); });
        f.witness = l.text;
    }
    if (auto it = by_name.find("locus"); it != by_name.end()) {
        require_single_line(*it->second);
        const Line& l = it->second->lines[0];
        located(l, [&] { return parse_poly(l.text, vars); });
        f.locus = l.text;
    }
    if (auto it = by_name.find("obstruction"); it != by_name.end())
        for (const auto& l : it->second->lines)
            f.obstruction_points.push_back(located(l, [&] { return parse_point(l.text, names.size()); }));
    if (auto it = by_name.find("options"); it != by_name.end())
        for (const auto& [key, v] : parse_options(*it->second)) {
            if (key == "degree_bound")
                f.degree_bound = parse_int(v);
            else if (key == "exactness_degree")
                f.exactness_degree = parse_int(v);
            else if (key == "name")
                f.name = v.text;
            else
                throw PresentationError("unknown option '" + key + "'", v.no, 1);
        }
    return f;
}

std::string write_presentation(const PresentationFile& file) {
    const LieNAlgebroid& A = file.algebroid;
    std::ostringstream os;
    os << "[variables]\n" << join(*A.vars()) << "\n";
    std::vector<std::string> rs;
    for (int r : A.bundle().ranks()) rs.push_back(std::to_string(r));
    os << "[ranks]\n" << join(rs) << "\n";
    os << "[labels]\n";
    for (int l = 0; l < A.depth(); ++l) os << l << ": " << join(A.bundle().labels()[l]) << "\n";
    os << "[anchor]\n";
    for (int i = 0; i < A.rank(0); ++i) {
        std::vector<std::string> cs;
        for (const auto& c : A.anchor(i).components()) cs.push_back(c.to_string());
        os << A.label({0, i}) << ": " << join(cs) << "\n";
    }
    if (A.depth() > 1) {
        os << "[differential]\n";
        for (int l = 1; l < A.depth(); ++l)
            for (int i = 0; i < A.rank(l); ++i) {
                const Section& s = A.differential(l, i);
                if (!s.is_zero()) os << A.label({l, i}) << ": " << s.to_string(A) << "\n";
            }
    }
    if (!A.l2_entries().empty()) {
        os << "[bracket2]\n";
        for (const auto& [k, v] : A.l2_entries())
            os << A.label(k.first) << ", " << A.label(k.second) << ": " << v.to_string(A) << "\n";
    }
    if (!A.l3_entries().empty()) {
        os << "[bracket3]\n";
        for (const auto& [k, v] : A.l3_entries())
            os << A.label(k[0]) << ", " << A.label(k[1]) << ", " << A.label(k[2]) << ": " << v.to_string(A) << "\n";
    }
    if (!A.l2_declared_blocks().empty() || !A.l3_declared_blocks().empty()) {
        os << "[declared]\n";
        for (const auto& [a, b] : A.l2_declared_blocks()) os << "l2: " << block_levels({a, b}) << "\n";
        for (const auto& t : A.l3_declared_blocks()) os << "l3: " << block_levels({t[0], t[1], t[2]}) << "\n";
    }
    if (file.witness) os << "[witness]\n" << *file.witness << "\n";
    if (file.locus) os << "[locus]\n" << *file.locus << "\n";
    if (!file.obstruction_points.empty()) {
        os << "[obstruction]\n";
        for (const auto& p : file.obstruction_points) os << point_string(p) << "\n";
    }
    if (!file.name.empty() || file.degree_bound || file.exactness_degree) {
        os << "[options]\n";
        if (!file.name.empty()) os << "name = " << file.name << "\n";
        if (file.degree_bound) os << "degree_bound = " << *file.degree_bound << "\n";
        if (file.exactness_degree) os << "exactness_degree = " << *file.exactness_degree << "\n";
    }
    return os.str();
}

std::vector<Rational> parse_point(const std::string& text, std::size_t dim) {
    std::vector<Rational> p;
    Line l{0, 1, text};
    for (const auto& part : split_top(l, ',')) {
        try {
            p.push_back(parse_rational(part.text));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), part.col + e.column() - 1);
        }
    }
    if (p.size() != dim)
        throw ParseError("point needs " + std::to_string(dim) + " coordinates, got " + std::to_string(p.size()), 1);
    return p;
}

// ---- regular presentations ----------------------------------------------------

namespace {

DifferentialForm read_form(const Block& b, const VarList& vars) {
    DifferentialForm w;
    int degree = -1;
    for (const auto& line : b.lines) {
        auto [k, v] = split_key(line);
        DifferentialForm::Word word;
        for (const auto& p : split_top(k, ',')) {
            auto it = std::find(vars->begin(), vars->end(), p.text);
            if (it == vars->end()) throw PresentationError("unknown variable '" + p.text + "'", p.no, p.col);
            word.push_back(static_cast<int>(it - vars->begin()));
        }
        if (degree == -1) {
            degree = static_cast<int>(word.size());
            w = DifferentialForm(vars, degree);
        } else if (degree != static_cast<int>(word.size())) {
            throw PresentationError("terms of different form degree", k.no, k.col);
        }
        RatLogExpr c = located(v, [&] { return parse_ratlog(v.text, vars); });
        if (c.has_logs()) throw PresentationError("form coefficients must be rational", v.no, v.col);
        located(k, [&] {
            w.add(word, c.rational());
            return 0;
        });
    }
    if (degree == -1) throw PresentationError("empty form", b.no, 1);
    return w;
}

void write_form(std::ostream& os, const DifferentialForm& w) {
    for (const auto& [word, c] : w.terms()) {
        std::vector<std::string> ns;
        for (int i : word) ns.push_back((*w.vars())[i]);
        os << join(ns) << ": " << c.to_string() << "\n";
    }
}

}  // namespace

RegularPresentation parse_regular(const std::string& text, const std::string& name) {
    auto blocks = split_blocks(text);
    RegularPresentation p;
    p.name = name;
    const Block* vb = nullptr;
    for (const auto& b : blocks)
        if (b.name == "variables") vb = &b;
    if (!vb) throw PresentationError("missing section [variables]", 1, 1);
    require_single_line(*vb);
    std::vector<std::string> names;
    for (const auto& part : split_top(vb->lines[0], ',')) {
        if (!is_identifier(part.text)) throw PresentationError("invalid variable name", part.no, part.col);
        names.push_back(part.text);
    }
    p.vars = make_vars(names);
    p.locus = Poly(p.vars);
    bool have_volume = false;
    for (const auto& b : blocks) {
        if (b.name == "variables") continue;
        if (b.name == "generators") {
            for (const auto& line : b.lines) {
                auto [k, v] = split_key(line);
                auto parts = split_top(v, ',');
                if (parts.size() != names.size())
                    throw PresentationError("generator needs one component per variable", v.no, v.col);
                std::vector<Poly> comps;
                for (const auto& c : parts) comps.push_back(located(c, [&] { return parse_poly(c.text, p.vars); }));
                p.generator_names.push_back(k.text);
                p.generators.emplace_back(p.vars, comps);
            }
        } else if (b.name == "annihilator") {
            p.annihilators.push_back(read_form(b, p.vars));
        } else if (b.name == "volume") {
            p.volume = read_form(b, p.vars);
            have_volume = true;
        } else if (b.name == "locus") {
            require_single_line(b);
            p.locus = located(b.lines[0], [&] { return parse_poly(b.lines[0].text, p.vars); });
        } else if (b.name == "witness") {
            require_single_line(b);
            p.witness = located(b.lines[0], [&] { return parse_ratlog(b.lines[0].text, p.vars); });
        } else if (b.name == "invariant") {
            require_single_line(b);
            RatLogExpr f = located(b.lines[0], [&] { return parse_ratlog(b.lines[0].text, p.vars); });
            if (f.has_logs()) throw PresentationError("invariant factor must be rational", b.lines[0].no, b.lines[0].col);
            p.invariant = f.rational();
        } else if (b.name == "options") {
            for (const auto& [key, v] : parse_options(b)) {
                if (key == "invariant_squared")
                    p.invariant_squared = v.text == "true";
                else if (key == "name")
                    p.name = v.text;
                else
                    throw PresentationError("unknown option '" + key + "'", v.no, 1);
            }
        } else {
            throw PresentationError("unknown section [" + b.name + "]", b.no, 1);
        }
    }
    if (!have_volume) throw PresentationError("missing section [volume]", 1, 1);
    if (p.generators.empty()) throw PresentationError("missing section [generators]", 1, 1);
    return p;
}

std::string write_regular(const RegularPresentation& p) {
    std::ostringstream os;
    os << "[variables]\n" << join(*p.vars) << "\n[generators]\n";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        std::vector<std::string> cs;
        for (const auto& c : p.generators[i].components()) cs.push_back(c.to_string());
        os << p.generator_names[i] << ": " << join(cs) << "\n";
    }
    for (const auto& a : p.annihilators) {
        os << "[annihilator]\n";
        write_form(os, a);
    }
    os << "[volume]\n";
    write_form(os, p.volume);
    if (!p.locus.is_zero()) os << "[locus]\n" << p.locus.to_string() << "\n";
    if (p.witness) os << "[witness]\n" << p.witness->to_string() << "\n";
    if (p.invariant) os << "[invariant]\n" << p.invariant->to_string() << "\n";
    os << "[options]\n";
    if (!p.name.empty()) os << "name = " << p.name << "\n";
    os << "invariant_squared = " << (p.invariant_squared ? "true" : "false") << "\n";
    return os.str();
}

// ---- builtins -------------------------------------------------------------------

namespace {

std::string sum_of_squares(const VarList& v) {
    std::vector<std::string> xs;
    for (const auto& n : *v) xs.push_back(n + "^2");
    return join(xs, " + ");
}

std::string scaled_log(const Rational& c, const std::string& arg) {
    return (c == 1 ? std::string() : rational_to_string(c) + "*") + "ln(" + arg + ")";
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"euler", "poisson3", "quadratic", "gln", "son", "son+euler", "son+euler-lifted", "single-vf"};
}

std::vector<std::string> builtin_regular_names() { return {"spiral", "circles", "euler-regular", "poisson3-regular"}; }

PresentationFile builtin_presentation(const std::string& name, std::optional<int> n,
                                      const std::optional<std::string>& field) {
    auto make = [&](LieNAlgebroid A, const std::string& label) {
        return PresentationFile{label, std::move(A), {}, {}, {}, {}, {}};
    };
    if (name == "euler") {
        int k = n.value_or(2);
        PresentationFile f = make(build_euler(k), "euler-" + std::to_string(k));
        f.witness = scaled_log(ratio(k, 2), sum_of_squares(f.algebroid.vars()));
        f.locus = sum_of_squares(f.algebroid.vars());
        return f;
    }
    if (name == "poisson3") {
        PresentationFile f = make(build_poisson_r3(), "poisson3");
        f.witness = "ln(x^2 + y^2)";
        f.locus = "x^2 + y^2";
        return f;
    }
    if (name == "quadratic") return make(build_quadratic_r2(), "quadratic");
    if (name == "gln") {
        int k = n.value_or(2);
        return make(build_gln(k), "gl" + std::to_string(k));
    }
    if (name == "son") {
        int k = n.value_or(3);
        return make(build_son(k), "so" + std::to_string(k));
    }
    if (name == "son+euler" || name == "son+euler-lifted") {
        int k = n.value_or(3);
        bool lifted = name == "son+euler-lifted";
        PresentationFile f = make(lifted ? build_son_euler_lifted(k) : direct_sum(build_son(k), build_euler(k)),
                                  "so" + std::to_string(k) + (lifted ? "+euler-lifted" : "+euler"));
        f.witness = scaled_log(lifted ? Rational(1) : ratio(k, 2), sum_of_squares(f.algebroid.vars()));
        f.locus = sum_of_squares(f.algebroid.vars());
        return f;
    }
    if (name == "single-vf") {
        std::string text = field.value_or("x2^2 + x3^2, 0, 0");
        Line l{1, 1, text};
        auto parts = split_top(l, ',');
        VarList v = default_vars(parts.size());
        std::vector<Poly> comps;
        for (const auto& p : parts) {
            try {
                comps.push_back(parse_poly(p.text, v));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), p.col + e.column() - 1);
            }
        }
        return make(build_single_vf(VectorField(v, comps)), "single-vf");
    }
    throw std::invalid_argument("unknown builtin '" + name + "'");
}

RegularPresentation builtin_regular(const std::string& name, std::optional<int> n) {
    if (name == "spiral") return spiral_presentation();
    if (name == "circles") return circles_presentation();
    if (name == "euler-regular") return euler_regular_presentation(n.value_or(2));
    if (name == "poisson3-regular") return poisson3_regular_presentation();
    throw std::invalid_argument("unknown regular presentation '" + name + "'");
}

// ---- reports --------------------------------------------------------------------

namespace {

Json failures_json(const std::vector<Failure>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(Json{{"where", f.where}, {"residual", f.residual}});
    return a;
}

Json structure_json(const LieNAlgebroid& A, bool& pass) {
    Json s;
    auto c = complex_check(A);
    s["complex"] = Json{{"pass", c.pass}, {"failures", failures_json(c.failures)}};
    auto an = anchor_morphism_sweep(A);
    s["anchor_morphism"] = Json{{"pass", an.failures.empty()},
                                {"checked", an.checked},
                                {"failures", failures_json(an.failures)},
                                {"unchecked", an.unchecked}};
    auto j = jacobi_sweep(A);
    s["jacobi"] = Json{{"pass", j.pass},
                       {"checked", j.checked},
                       {"failures", failures_json(j.failures)},
                       {"unchecked_blocks", j.unchecked_blocks},
                       {"unchecked_tuples", j.unchecked_tuples}};
    pass = c.pass && an.failures.empty() && j.pass;
    return s;
}

}  // namespace

Json verify_json(const PresentationFile& file, const VerifyOptions& options) {
    const LieNAlgebroid& A = file.algebroid;
    Json out;
    out["name"] = file.name;
    bool pass = true;
    out["structure_checks"] = structure_json(A, pass);
    std::optional<int> deg = options.exactness_degree ? options.exactness_degree : file.exactness_degree;
    if (deg) {
        auto r = sliced_exactness(A, *deg);
        Json slices = Json::array();
        for (const auto& e : r.entries)
            slices.push_back(Json{{"level", e.level},
                                  {"degree", e.degree},
                                  {"kernel_dim", e.kernel_dim},
                                  {"image_dim", e.image_dim},
                                  {"exact", e.exact()}});
        out["structure_checks"]["sliced_exactness"] = Json{{"bound", r.bound}, {"exact", r.exact()}, {"slices", slices}};
        pass = pass && r.exact();
    }
    out["pass"] = pass;
    return out;
}

ReportOptions report_options(const PresentationFile& file, std::optional<int> degree_bound,
                             const std::optional<std::string>& witness,
                             const std::vector<std::vector<Rational>>& points) {
    ReportOptions o;
    o.degree_bound = degree_bound ? *degree_bound : file.degree_bound.value_or(6);
    o.obstruction_points = points.empty() ? file.obstruction_points : points;
    std::optional<std::string> w = witness ? witness : file.witness;
    if (w) o.witness = parse_ratlog(*w, file.algebroid.vars());
    o.witness_locus = witness ? std::string() : file.locus.value_or("");
    return o;
}

Json modular_json(const PresentationFile& file, const ReportOptions& options) {
    const LieNAlgebroid& A = file.algebroid;
    ModularReport r = assemble_report(A, options);
    Json out;
    out["name"] = file.name;
    bool structure_pass = true;
    out["structure_checks"] = structure_json(A, structure_pass);
    Json theta = Json::object();
    Json contrib = Json::object();
    for (int a = 0; a < A.rank(0); ++a) {
        const std::string lab = A.label({0, a});
        theta[lab] = r.theta.values[a].to_string();
        Json traces = Json::array();
        for (const auto& t : r.theta.traces[a]) traces.push_back(t.to_string());
        contrib[lab] = Json{{"divergence", r.theta.divergences[a].to_string()}, {"traces", traces}};
    }
    out["theta"] = theta;
    out["contributions"] = contrib;
    out["closedness"] = Json{{"pass", r.closedness.pass},
                             {"d0_checked", r.closedness.d0_checked},
                             {"d1_checked", r.closedness.d1_checked},
                             {"failures", failures_json(r.closedness.failures)},
                             {"unchecked", r.closedness.unchecked}};
    Json ex;
    ex["verdict"] = to_string(r.exactness.kind);
    ex["witness"] = r.exactness.witness ? Json(r.exactness.witness->to_string()) : Json(nullptr);
    ex["obstruction_point"] = r.exactness.kind == Verdict::NotExactNear ? point_json(r.exactness.point) : Json(nullptr);
    ex["obstruction_basis"] =
        r.exactness.basis_index >= 0 ? Json(A.label({0, r.exactness.basis_index})) : Json(nullptr);
    ex["degree_bound"] = r.exactness.bound;
    out["exactness"] = ex;
    Json obs = Json::array();
    for (const auto& o : r.obstructions) {
        Json j{{"point", point_json(o.point)}, {"obstructed", o.obstructed}};
        if (o.obstructed) {
            j["basis"] = A.label({0, o.basis_index});
            j["value"] = rational_to_string(o.value);
        }
        obs.push_back(j);
    }
    out["obstructions"] = obs;
    if (r.witness_check) {
        Json res = Json::object();
        for (int a = 0; a < A.rank(0); ++a) res[A.label({0, a})] = r.witness_check->residuals[a].to_string();
        out["witness_check"] = Json{{"witness", options.witness->to_string()},
                                    {"locus", options.witness_locus},
                                    {"pass", r.witness_check->pass},
                                    {"residuals", res}};
    }
    out["unimodular"] = to_string(r.unimodular);
    out["pass"] = structure_pass && r.closedness.pass && (!r.witness_check || r.witness_check->pass);
    return out;
}

Json bott_json(const RegularPresentation& p, const std::optional<RatLogExpr>& extra_witness) {
    Json out;
    out["name"] = p.name;
    out["variables"] = *p.vars;
    bool annih = annihilator_consistent(p);
    bool flat = bott_flat(p);
    out["annihilator_consistent"] = annih;
    out["flat"] = flat;
    bool pass = annih && flat;
    Json theta = Json::object();
    std::vector<RatFunc> values;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        values.push_back(transverse_modular_value(p, p.generators[i]));
        theta[p.generator_names[i]] = values.back().to_string();
    }
    out["theta"] = theta;
    Json checks = Json::array();
    auto check = [&](const RatLogExpr& h) {
        Json res = Json::object();
        bool ok = true;
        auto rs = transverse_witness_residuals(p, h);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            res[p.generator_names[i]] = rs[i].to_string();
            ok = ok && rs[i].is_zero();
        }
        checks.push_back(Json{{"witness", h.to_string()}, {"pass", ok}, {"residuals", res}});
        pass = pass && ok;
    };
    if (p.witness) check(*p.witness);
    if (extra_witness) check(*extra_witness);
    out["witness_checks"] = checks;
    if (p.invariant) {
        bool ok = true;
        for (const auto& u : p.generators)
            ok = ok && (p.invariant_squared ? invariance_check_squared(p, u, *p.invariant)
                                            : invariance_check(p, u, *p.invariant));
        out["invariant"] = Json{{"factor", p.invariant->to_string()}, {"squared", p.invariant_squared}, {"pass", ok}};
        pass = pass && ok;
    }
    out["locus"] = p.locus.to_string();
    out["pass"] = pass;
    return out;
}

}  // namespace folia
