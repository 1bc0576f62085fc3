#include "gcb/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gcb {

using nlohmann::json;

namespace {

struct Kind {
    const char* operator()(const FiniteGroup&) const { return "group"; }
    const char* operator()(const Cochain&) const { return "cochain"; }
    const char* operator()(const AbelianThreeCocycle&) const { return "braided"; }
    const char* operator()(const GCrossedPointedCategory&) const { return "gcrossed"; }
    const char* operator()(const PointedGrayMonoid&) const { return "gray"; }
    const char* operator()(const GCrossedMonoid&) const { return "crossed_monoid"; }
    const char* operator()(const GCrossedFunctor&) const { return "functor"; }
};

// ---- writing ----------------------------------------------------------------

json group_json(const FiniteGroup& G) {
    if (G == make_cyclic(G.order)) return {{"cyclic", G.order}};
    if (G.order >= 6 && G.order % 2 == 0 && G == make_dihedral(G.order / 2)) return {{"dihedral", G.order / 2}};
    return {{"table", G.table}};
}

json gcrossed_json(const GCrossedPointedCategory& C) {
    return {{"group", group_json(C.G)}, {"K", C.K.factors}, {"objects", C.n},   {"grade", C.grade},
            {"unit", C.unit},           {"tensor", C.tensor}, {"assoc", C.assoc}, {"lunit", C.lunit},
            {"runit", C.runit},         {"act", C.act},       {"iunit", C.iunit}, {"psi", C.psi},
            {"muact", C.muact},         {"iota", C.iota},     {"braid", C.braid}};
}

json body_json(const Payload& p) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FiniteGroup>) {
                return {{"group", group_json(v)}};
            } else if constexpr (std::is_same_v<T, Cochain>) {
                return {{"group", group_json(v.G)}, {"coeff", v.K.factors}, {"degree", v.degree}, {"values", v.values}};
            } else if constexpr (std::is_same_v<T, AbelianThreeCocycle>) {
                return {{"A", v.A.factors}, {"K", v.K.factors}, {"alpha", v.alpha.values}, {"beta", v.beta}};
            } else if constexpr (std::is_same_v<T, GCrossedPointedCategory>) {
                return gcrossed_json(v);
            } else if constexpr (std::is_same_v<T, PointedGrayMonoid>) {
                return {{"group", group_json(v.G)}, {"K", v.K.factors}, {"labels", v.labels},
                        {"label_grade", v.label_grade}, {"id_label", v.id_label}, {"comp", v.comp},
                        {"L", v.L}, {"R", v.R}, {"phi", v.phi}};
            } else if constexpr (std::is_same_v<T, GCrossedMonoid>) {
                return {{"group", group_json(v.G)}, {"elements", v.n}, {"grade", v.grade},
                        {"mult", v.mult}, {"unit", v.unit}, {"act", v.act}};
            } else {
                return {{"source", gcrossed_json(v.source)}, {"target", gcrossed_json(v.target)}, {"obj", v.obj},
                        {"A1", v.A1}, {"A2", v.A2}, {"ag", v.ag}};
            }
        },
        p);
}

// ---- reading ----------------------------------------------------------------

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(where + ": missing field '" + name + "'");
    return j.at(name);
}

int get_int(const json& j, const char* name, const std::string& where) {
    const json& v = field(j, name, where);
    if (!v.is_number_integer()) throw ParseError(where + "." + name + ": expected an integer");
    return v.get<int>();
}

std::vector<int> get_ints(const json& j, const char* name, const std::string& where, std::size_t want,
                          int range = -1) {
    const json& v = field(j, name, where);
    if (!v.is_array()) throw ParseError(where + "." + name + ": expected an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            throw ParseError(where + "." + name + "[" + std::to_string(i) + "]: expected an integer");
        int x = v[i].get<int>();
        if (range >= 0 && (x < 0 || x >= range))
            throw ParseError(where + "." + name + "[" + std::to_string(i) + "]: value " + std::to_string(x) +
                             " out of range");
        out.push_back(x);
    }
    if (want != static_cast<std::size_t>(-1) && out.size() != want)
        throw ParseError(where + "." + name + ": expected " + std::to_string(want) + " entries, got " +
                         std::to_string(out.size()));
    return out;
}

constexpr std::size_t kAny = static_cast<std::size_t>(-1);

FiniteGroup parse_group(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_group_spec(j.get<std::string>());
        if (!j.is_object()) throw ParseError(where + ": expected a group object");
        if (j.contains("cyclic")) return make_cyclic(get_int(j, "cyclic", where));
        if (j.contains("dihedral")) return make_dihedral(get_int(j, "dihedral", where));
        if (j.contains("product")) {
            const auto& p = j.at("product");
            if (!p.is_array() || p.empty()) throw ParseError(where + ".product: expected a nonempty array");
            FiniteGroup G = parse_group(p[0], where + ".product[0]");
            for (std::size_t i = 1; i < p.size(); ++i)
                G = make_product(G, parse_group(p[i], where + ".product[" + std::to_string(i) + "]"));
            return G;
        }
        if (j.contains("table")) return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": group needs one of cyclic, dihedral, product, table");
}

FiniteAbelianGroup parse_abelian(const json& j, const char* name, const std::string& where) {
    auto f = get_ints(j, name, where, kAny);
    for (int m : f)
        if (m < 1) throw ParseError(where + "." + name + ": cyclic factors must be positive");
    return FiniteAbelianGroup(f);
}

GCrossedPointedCategory parse_gcrossed(const json& j, const std::string& w) {
    FiniteGroup G = parse_group(field(j, "group", w), w + ".group");
    FiniteAbelianGroup K = parse_abelian(j, "K", w);
    const int n = get_int(j, "objects", w);
    if (n < 1) throw ParseError(w + ".objects: must be positive");
    const std::size_t N = n, g = G.order, k = K.order;
    auto grade = get_ints(j, "grade", w, N, G.order);
    auto C = GCrossedPointedCategory::blank(G, K, grade);
    C.unit = get_int(j, "unit", w);
    if (C.unit < 0 || C.unit >= n) throw ParseError(w + ".unit: out of range");
    C.tensor = get_ints(j, "tensor", w, N * N, n);
    C.assoc = get_ints(j, "assoc", w, N * N * N, k);
    C.lunit = get_ints(j, "lunit", w, N, k);
    C.runit = get_ints(j, "runit", w, N, k);
    C.act = get_ints(j, "act", w, g * N, n);
    C.iunit = get_ints(j, "iunit", w, g, k);
    C.psi = get_ints(j, "psi", w, g * N * N, k);
    C.muact = get_ints(j, "muact", w, g * g * N, k);
    C.iota = get_ints(j, "iota", w, N, k);
    C.braid = get_ints(j, "braid", w, N * N, k);
    // a braiding scalar only makes sense between equal objects
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (C.T(x, y) != C.T(C.F(C.gr(x), y), x))
                throw ParseError(w + ".braid[" + std::to_string(x) + "," + std::to_string(y) +
                                 "]: source x*y and target F_g(y)*x are different objects");
    return C;
}

Payload parse_body(const std::string& kind, const json& j) {
    const std::string w = kind;
    if (kind == "group") return parse_group(field(j, "group", w), w + ".group");
    if (kind == "cochain") {
        FiniteGroup G = parse_group(field(j, "group", w), w + ".group");
        FiniteAbelianGroup K = parse_abelian(j, "coeff", w);
        int deg = get_int(j, "degree", w);
        if (deg < 0 || deg > 6) throw ParseError(w + ".degree: unsupported degree");
        Cochain c(G, K, deg);
        c.values = get_ints(j, "values", w, c.size(), K.order);
        return c;
    }
    if (kind == "braided") {
        AbelianThreeCocycle ac(parse_abelian(j, "A", w), parse_abelian(j, "K", w));
        const std::size_t a = ac.A.order;
        ac.alpha.values = get_ints(j, "alpha", w, a * a * a, ac.K.order);
        ac.beta = get_ints(j, "beta", w, a * a, ac.K.order);
        return ac;
    }
    if (kind == "gcrossed") return parse_gcrossed(j, w);
    if (kind == "gray") {
        PointedGrayMonoid M;
        M.G = parse_group(field(j, "group", w), w + ".group");
        M.K = parse_abelian(j, "K", w);
        M.labels = get_int(j, "labels", w);
        if (M.labels < 1) throw ParseError(w + ".labels: must be positive");
        const std::size_t n = M.labels, g = M.G.order, cells = g * n;
        M.label_grade = get_ints(j, "label_grade", w, n, M.G.order);
        M.id_label = get_ints(j, "id_label", w, g, M.labels);
        M.comp = get_ints(j, "comp", w, g * n * n, M.labels);
        M.L = get_ints(j, "L", w, g * cells, static_cast<int>(cells));
        M.R = get_ints(j, "R", w, g * cells, static_cast<int>(cells));
        M.phi = get_ints(j, "phi", w, cells * cells, M.K.order);
        return M;
    }
    if (kind == "crossed_monoid") {
        GCrossedMonoid M;
        M.G = parse_group(field(j, "group", w), w + ".group");
        M.n = get_int(j, "elements", w);
        if (M.n < 1) throw ParseError(w + ".elements: must be positive");
        const std::size_t n = M.n;
        M.grade = get_ints(j, "grade", w, n, M.G.order);
        M.mult = get_ints(j, "mult", w, n * n, M.n);
        M.unit = get_int(j, "unit", w);
        if (M.unit < 0 || M.unit >= M.n) throw ParseError(w + ".unit: out of range");
        M.act = get_ints(j, "act", w, M.G.order * n, M.n);
        return M;
    }
    if (kind == "functor") {
        GCrossedFunctor F;
        F.source = parse_gcrossed(field(j, "source", w), w + ".source");
        F.target = parse_gcrossed(field(j, "target", w), w + ".target");
        const std::size_t n = F.source.n;
        F.obj = get_ints(j, "obj", w, n, F.target.n);
        F.A1 = get_int(j, "A1", w);
        const int k = F.source.K.order;
        if (F.A1 < 0 || F.A1 >= k) throw ParseError(w + ".A1: out of range");
        F.A2 = get_ints(j, "A2", w, n * n, k);
        F.ag = get_ints(j, "ag", w, F.source.G.order * n, k);
        return F;
    }
    throw ParseError("unknown document kind '" + kind + "'");
}

}  // namespace

std::string Document::kind() const { return std::visit(Kind{}, body); }

std::string to_text(const Document& d) {
    json body = body_json(d.body);
    // one top-level field per line: readable without exploding every array
    std::ostringstream os;
    os << "{\n  \"format_version\": " << json(d.format_version).dump() << ",\n  \"kind\": " << json(d.kind()).dump();
    for (auto it = body.begin(); it != body.end(); ++it) os << ",\n  " << json(it.key()).dump() << ": " << it.value().dump();
    os << "\n}\n";
    return os.str();
}

Document from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("format_version") || !j["format_version"].is_string()) throw ParseError("missing field 'format_version'");
    std::string ver = j["format_version"].get<std::string>();
    if (ver.substr(0, ver.find('.')) != std::string(kFormatVersion).substr(0, 1))
        throw SchemaVersionMismatch("format_version " + ver + " is not supported (expected " + kFormatVersion + ")");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing field 'kind'");
    Document d;
    d.format_version = ver;
    d.body = parse_body(j["kind"].get<std::string>(), j);
    return d;
}

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return from_text(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save(const Document& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_text(d);
}

}  // namespace gcb
