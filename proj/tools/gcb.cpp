#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gcb/cochain.hpp"
#include "gcb/crossed_monoid.hpp"
#include "gcb/gcrossed.hpp"
#include "gcb/graymonoid.hpp"
#include "gcb/io.hpp"

using namespace gcb;

namespace {

// input problems (bad files, unmet preconditions, work bound) -> exit 2
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string report = "first";
    int jobs = 1;
    bool force = false;
};

long max_order() {
    const char* env = std::getenv("GCB_MAX_ORDER");
    if (!env || !*env) return 4096;
    try {
        std::size_t used = 0;
        long v = std::stol(env, &used);
        if (used != std::strlen(env) || v <= 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("GCB_MAX_ORDER must be a positive integer, got '") + env + "'");
    }
}

void check_work(long work, const Common& c) {
    long cap = max_order();
    if (work > cap && !c.force)
        throw InputError("largest axiom class has " + std::to_string(work) + " tuples, above GCB_MAX_ORDER=" +
                         std::to_string(cap) + "; pass --force to run anyway");
}

VerifyOptions verify_opts(const Common& c) {
    VerifyOptions o;
    o.exhaustive = c.report == "all";
    o.jobs = c.jobs;
    return o;
}

long gray_work(const PointedGrayMonoid& M) {
    long cells = M.cells();
    return cells * cells * M.G.order;
}

int print_report(const std::string& what, const Report& r, const Common& c) {
    if (r.ok()) {
        std::cout << what << ": all axioms hold\n";
        return 0;
    }
    std::cout << what << ": " << r.total << " failure" << (r.total == 1 ? "" : "s") << "\n";
    if (c.report == "first") {
        Report first;
        first.total = 1;
        first.failures.push_back(r.failures.front());
        std::cout << first.str();
    } else {
        std::cout << r.str();
    }
    return 1;
}

Document load_doc(const std::string& path) { return load(path); }

FiniteGroup group_arg(const std::string& s) {
    if (std::filesystem::exists(s)) {
        Document d = load_doc(s);
        if (auto* g = std::get_if<FiniteGroup>(&d.body)) return *g;
        throw InputError(s + ": expected a group document, got " + d.kind());
    }
    try {
        return parse_group_spec(s);
    } catch (const std::exception& e) {
        throw InputError("--group: " + std::string(e.what()));
    }
}

AbelianThreeCocycle braided_arg(const std::string& path) {
    Document d = load_doc(path);
    if (auto* b = std::get_if<AbelianThreeCocycle>(&d.body)) return *b;
    throw InputError(path + ": expected a braided document, got " + d.kind());
}

Cochain cochain_arg(const std::string& s, const FiniteGroup& G, const FiniteAbelianGroup& coeff, int degree,
                    const char* flag) {
    if (s == "0") return Cochain(G, coeff, degree);
    Document d = load_doc(s);
    auto* c = std::get_if<Cochain>(&d.body);
    if (!c) throw InputError(std::string(flag) + ": expected a cochain document, got " + d.kind());
    if (c->degree != degree) throw InputError(std::string(flag) + ": expected degree " + std::to_string(degree));
    if (!(c->G == G)) throw InputError(std::string(flag) + ": cochain lives on a different group");
    if (!(c->K == coeff)) throw InputError(std::string(flag) + ": wrong coefficient group");
    return *c;
}

GCrossedPointedCategory gcrossed_of(const Document& d, const std::string& path) {
    if (auto* c = std::get_if<GCrossedPointedCategory>(&d.body)) return *c;
    if (auto* m = std::get_if<PointedGrayMonoid>(&d.body)) return to_gcrossed(*m);
    throw InputError(path + ": expected a gcrossed or gray document, got " + d.kind());
}

void emit(const Document& d, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << to_text(d);
    else
        save(d, out);
}

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// ---- subcommands ------------------------------------------------------------

int cmd_verify(const std::string& path, const Common& c) {
    Document d = load_doc(path);
    VerifyOptions o = verify_opts(c);
    return std::visit(
        [&](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FiniteGroup>) {
                return print_report("group", check_group_axioms(v.table), c);
            } else if constexpr (std::is_same_v<T, Cochain>) {
                Cochain dc = coboundary(v);
                Report r;
                r.exhaustive = o.exhaustive;
                for (std::size_t i = 0; i < dc.size(); ++i)
                    if (dc.values[i] != 0) r.add("cocycle", dc.args(i), dc.values[i]);
                return print_report("cochain", r, c);
            } else if constexpr (std::is_same_v<T, AbelianThreeCocycle>) {
                long a = v.A.order;
                check_work(a * a * a * a, c);
                Report r = check_pentagon(v);
                r.exhaustive = o.exhaustive;
                r.merge(check_hexagons(v));
                return print_report("braided", r, c);
            } else if constexpr (std::is_same_v<T, GCrossedPointedCategory>) {
                check_work(verification_work(v), c);
                return print_report("gcrossed", verify_all(v, o), c);
            } else if constexpr (std::is_same_v<T, PointedGrayMonoid>) {
                check_work(gray_work(v), c);
                return print_report("gray", verify_gray(v, o), c);
            } else if constexpr (std::is_same_v<T, GCrossedMonoid>) {
                return print_report("crossed_monoid", verify(v), c);
            } else {
                check_work(verification_work(v.source), c);
                Report r = verify_all(v.source, o);
                r.merge(verify_all(v.target, o));
                r.merge(verify_functor(v, o));
                return print_report("functor", r, c);
            }
        },
        d.body);
}

int print_obstruction(const Cochain& o4) {
    int nonzero = 0;
    for (std::size_t i = 0; i < o4.size(); ++i) {
        if (o4.values[i] == 0) continue;
        ++nonzero;
        std::cout << "o4" << tuple_str(o4.args(i)) << " = " << o4.values[i] << "\n";
    }
    if (!nonzero) std::cout << "pushforward vanishes identically\n";
    return nonzero;
}

int cmd_obstruction(const std::string& path, const std::string& group, const std::string& mu_s) {
    AbelianThreeCocycle B = braided_arg(path);
    FiniteGroup G = group_arg(group);
    Cochain mu = cochain_arg(mu_s, G, B.A, 2, "--mu");
    if (!is_cocycle(mu)) throw InputError("--mu is not a 2-cocycle");
    print_obstruction(pw_pushforward(mu, B));
    if (solve_obstruction(mu, B)) {
        std::cout << "omega exists\n";
        return 0;
    }
    std::cout << "no omega exists\n";
    return 1;
}

int cmd_zest(const std::string& path, const std::string& group, const std::string& mu_s, const std::string& omega_s,
             const std::string& out, const Common& c) {
    AbelianThreeCocycle B = braided_arg(path);
    FiniteGroup G = group_arg(group);
    Cochain mu = cochain_arg(mu_s, G, B.A, 2, "--mu");
    {
        long n = static_cast<long>(G.order) * B.A.order, g = G.order;
        check_work(std::max({n * n * n * n, g * g * g * n}), c);
    }
    Cochain omega;
    if (omega_s == "solve") {
        auto w = solve_obstruction(mu, B);
        if (!w) {
            print_obstruction(pw_pushforward(mu, B));
            std::cout << "no omega exists\n";
            return 1;
        }
        omega = *w;
    } else {
        omega = cochain_arg(omega_s, G, B.K, 3, "--omega");
    }
    GCrossedPointedCategory C;
    try {
        C = zest(B, G, mu, omega);
    } catch (const ObstructionNonvanishing& e) {
        std::cout << e.what() << "\n";
        print_obstruction(e.obstruction);
        std::cout << "no omega exists\n";
        return 1;
    } catch (const NotACocycle& e) {
        throw InputError(e.what());
    } catch (const InvalidAbelianCocycle& e) {
        throw InputError(e.what());
    }
    Report r = verify_all(C, verify_opts(c));
    if (!r.ok()) return print_report("zest output", r, c);
    emit(Document{kFormatVersion, C}, out);
    if (!out.empty() && out != "-") std::cout << "wrote " << out << " (" << C.n << " objects)\n";
    return 0;
}

int cmd_roundtrip(const std::string& path, const std::string& out, const Common& c) {
    Document d = load_doc(path);
    if (auto* m = std::get_if<PointedGrayMonoid>(&d.body)) {
        check_work(gray_work(*m), c);
        Report r = verify_gray(*m, verify_opts(c));
        if (!r.ok()) return print_report("gray", r, c);
        PointedGrayMonoid back = from_gcrossed(to_gcrossed(*m));
        if (!(back == *m)) {
            std::cout << "round trip differs from the input\n";
            return 1;
        }
        std::cout << "round trip: identical\n";
        return 0;
    }
    auto* C = std::get_if<GCrossedPointedCategory>(&d.body);
    if (!C) throw InputError(path + ": expected a gcrossed or gray document, got " + d.kind());
    check_work(verification_work(*C), c);
    Report pre = verify_all(*C, verify_opts(c));
    if (!pre.ok()) return print_report("gcrossed", pre, c);
    RoundTrip rt;
    try {
        rt = roundtrip_check(*C);
    } catch (const NotStrict& e) {
        throw InputError(e.what());
    } catch (const RoundTripMismatch& e) {
        std::cout << e.what() << "\n";
        return 1;
    } catch (const GrayAxiomFailure& e) {
        std::cout << e.what();
        return 1;
    }
    if (!rt.functor_report.ok()) return print_report("identity functor", rt.functor_report, c);
    std::cout << "round trip: identical, identity functor verified\n";
    if (!out.empty()) emit(Document{kFormatVersion, from_gcrossed(*C)}, out);
    return 0;
}

int cmd_enumerate(const std::string& A_s, const std::string& K_s, const Common& c) {
    FiniteAbelianGroup A, K;
    try {
        A = parse_abelian_spec(A_s);
        K = parse_abelian_spec(K_s);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    long cap = c.force ? (1L << 40) : max_order();
    std::size_t forms;
    long classes;
    try {
        forms = enumerate_quadratic_forms(A, K, c.force ? (1L << 40) : std::max(cap, 1L << 20)).size();
        classes = enumerate_abelian_cocycle_classes(A, K, cap);
    } catch (const BoundExceeded& e) {
        throw InputError(std::string(e.what()) + "; pass --force to run anyway");
    }
    std::cout << "quadratic forms: " << forms << ", cocycle classes: " << classes << "\n";
    return static_cast<long>(forms) == classes ? 0 : 1;
}

int cmd_decategorify(const std::string& path, const std::string& out, const Common& c) {
    Document d = load_doc(path);
    GCrossedPointedCategory C = gcrossed_of(d, path);
    check_work(verification_work(C), c);
    GCrossedMonoid M = decategorify(C);
    Report r = verify(M);
    if (!r.ok()) return print_report("crossed_monoid", r, c);
    emit(Document{kFormatVersion, M}, out);
    if (!out.empty() && out != "-") std::cout << "wrote " << out << " (" << M.n << " elements)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gcb: pointed G-crossed braided categories, zesting and Gray-monoids"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--report", common.report, "print the first failure or all of them")
            ->check(CLI::IsMember({"first", "all"}));
        s->add_option("--jobs", common.jobs, "verifier threads")->check(CLI::PositiveNumber);
        s->add_flag("--force", common.force, "ignore GCB_MAX_ORDER");
    };

    std::string path, group, mu = "0", omega = "solve", out, A_s, K_s;

    auto* verify_cmd = app.add_subcommand("verify", "check every axiom suite that applies to a document");
    verify_cmd->add_option("path", path)->required();
    add_common(verify_cmd);

    auto* zest_cmd = app.add_subcommand("zest", "zest a braided pointed category by (mu, omega)");
    zest_cmd->add_option("braided", path)->required();
    zest_cmd->add_option("--group", group, "group spec (Z2, Z2xZ3, D3) or group document")->required();
    zest_cmd->add_option("--mu", mu, "2-cocycle document or 0");
    zest_cmd->add_option("--omega", omega, "3-cochain document, 0, or solve");
    zest_cmd->add_option("--out", out);
    add_common(zest_cmd);

    auto* obs_cmd = app.add_subcommand("obstruction", "print the pushforward 4-cocycle and whether omega exists");
    obs_cmd->add_option("braided", path)->required();
    obs_cmd->add_option("--group", group)->required();
    obs_cmd->add_option("--mu", mu);

    auto* rt_cmd = app.add_subcommand("roundtrip", "G-crossed -> Gray-monoid -> G-crossed, compared entrywise");
    rt_cmd->add_option("path", path)->required();
    rt_cmd->add_option("--out", out, "write the intermediate Gray-monoid");
    add_common(rt_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "count quadratic forms and abelian 3-cocycle classes");
    enum_cmd->add_option("--A", A_s)->required();
    enum_cmd->add_option("--K", K_s)->required();
    add_common(enum_cmd);

    auto* dec_cmd = app.add_subcommand("decategorify", "the G-crossed monoid of isomorphism classes");
    dec_cmd->add_option("path", path)->required();
    dec_cmd->add_option("--out", out);
    add_common(dec_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) return cmd_verify(path, common);
        if (*zest_cmd) return cmd_zest(path, group, mu, omega, out, common);
        if (*obs_cmd) return cmd_obstruction(path, group, mu);
        if (*rt_cmd) return cmd_roundtrip(path, out, common);
        if (*enum_cmd) return cmd_enumerate(A_s, K_s, common);
        if (*dec_cmd) return cmd_decategorify(path, out, common);
    } catch (const GrayAxiomFailure& e) {
        std::cerr << "gcb: " << e.what();
        return 1;
    } catch (const InputError& e) {
        std::cerr << "gcb: " << e.what() << "\n";
        return 2;
    } catch (const SchemaVersionMismatch& e) {
        std::cerr << "gcb: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "gcb: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gcb: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gcb: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
