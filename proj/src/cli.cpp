#include "markov/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "markov/error.hpp"
#include "markov/proof_identities.hpp"
#include "markov/seq_expr.hpp"

namespace markov::cli {

Json to_json(const Seq& s) {
    Json arr = Json::array();
    for (const auto& e : s) arr.push_back(to_decimal(e));
    return arr;
}

Json to_json(const IntTriple& t) {
    return Json::array({to_decimal(t.left), to_decimal(t.middle), to_decimal(t.right)});
}

namespace {

Json range_json(const std::optional<IntRange>& r) {
    if (!r) return nullptr;
    return Json{{"first", std::to_string(r->first)}, {"last", std::to_string(r->last)}};
}

std::optional<IntRange> range_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return IntRange::of(std::stoull(j.at("first").get<std::string>()),
                        std::stoull(j.at("last").get<std::string>()));
}

Json opt_index(const std::optional<std::uint64_t>& v) {
    if (!v) return nullptr;
    return std::to_string(*v);
}

std::optional<std::uint64_t> index_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return std::stoull(j.get<std::string>());
}

}  // namespace

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json witnesses = Json::array();
        for (const auto& w : c.witnesses) witnesses.push_back({{"name", w.name}, {"value", w.value}});
        checks.push_back({{"claim", c.claim},
                          {"n", opt_index(c.n)},
                          {"j", opt_index(c.j)},
                          {"pass", c.pass},
                          {"witnesses", std::move(witnesses)}});
    }
    return Json{{"n_range", range_json(r.n_range)},
                {"j_range", range_json(r.j_range)},
                {"all_pass", r.all_pass()},
                {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.n_range = range_from(j.at("n_range"));
    r.j_range = range_from(j.at("j_range"));
    for (const auto& c : j.at("checks")) {
        Check check;
        check.claim = c.at("claim").get<std::string>();
        check.n = index_from(c.at("n"));
        check.j = index_from(c.at("j"));
        check.pass = c.at("pass").get<bool>();
        for (const auto& w : c.at("witnesses"))
            check.witnesses.push_back({w.at("name").get<std::string>(), w.at("value").get<std::string>()});
        r.checks.push_back(std::move(check));
    }
    return r;
}

Json to_json(const Collision& c) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back({{"path", m.path.str()}, {"triple", to_json(m.ints)}});
    return Json{{"largest", to_decimal(c.largest)}, {"members", std::move(members)}};
}

std::string cf_text(const Seq& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 1) out += "; ";
        else if (i > 1) out += ": ";
        out += s[i].get_str();
    }
    return out + "]";
}

namespace {

enum class Format { Text, Json };

struct Common {
    std::string format = "text";
    unsigned threads = 0;

    [[nodiscard]] Format fmt() const { return format == "json" ? Format::Json : Format::Text; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

void emit_json(std::ostream& out, const Json& record) { out << record.dump(2) << '\n'; }

Seq command_seq(const std::string& text) {
    // parse_seq_expr already rejects expressions denoting no elements.
    return parse_seq(text);
}

int cmd_cf(const std::string& expr, const Common& c, std::ostream& out) {
    Seq s = command_seq(expr);
    Rational v = cf_eval(s);
    if (c.fmt() == Format::Json) {
        Json rec = header("cf");
        rec["sequence"] = to_json(s);
        rec["numerator"] = to_decimal(v.numerator());
        rec["denominator"] = to_decimal(v.denominator());
        rec["value"] = v.to_string();
        emit_json(out, rec);
    } else {
        out << v.to_string() << '\n';
    }
    return kSuccess;
}

int cmd_sine(const std::string& expr, const Common& c, std::ostream& out) {
    Seq s = command_seq(expr);
    BigInt v = integer_sine(s);
    if (c.fmt() == Format::Json) {
        Json rec = header("sine");
        rec["sequence"] = to_json(s);
        rec["value"] = to_decimal(v);
        emit_json(out, rec);
    } else {
        out << to_decimal(v) << '\n';
    }
    return kSuccess;
}

struct TreeArgs {
    std::string alpha;
    std::string beta;
    std::size_t depth = 0;
    std::size_t max_depth = kDefaultMaxDepth;
};

std::string path_label(const Path& p) { return p.depth() == 0 ? "root" : p.str(); }

int cmd_tree(const TreeArgs& a, const Common& c, std::ostream& out) {
    Seq alpha = command_seq(a.alpha);
    Seq beta = command_seq(a.beta);
    TraversalOptions opts{a.max_depth, c.threads};
    if (c.fmt() == Format::Json) {
        Json vertices = Json::array();
        traverse(alpha, beta, a.depth,
                 [&](const TreeEntry& e) {
                     vertices.push_back({{"path", e.path.str()}, {"triple", to_json(e.ints)}});
                 },
                 opts);
        Json rec = header("tree");
        rec["alpha"] = to_json(alpha);
        rec["beta"] = to_json(beta);
        rec["depth"] = std::to_string(a.depth);
        rec["vertices"] = std::move(vertices);
        emit_json(out, rec);
    } else {
        traverse(alpha, beta, a.depth,
                 [&](const TreeEntry& e) { out << path_label(e.path) << '\t' << e.ints.to_string() << '\n'; },
                 opts);
    }
    return kSuccess;
}

int cmd_collide(const TreeArgs& a, const Common& c, std::ostream& out) {
    Seq alpha = command_seq(a.alpha);
    Seq beta = command_seq(a.beta);
    auto collisions = collision_search(alpha, beta, a.depth, {a.max_depth, c.threads});
    if (c.fmt() == Format::Json) {
        Json groups = Json::array();
        for (const auto& g : collisions) groups.push_back(to_json(g));
        Json rec = header("collide");
        rec["alpha"] = to_json(alpha);
        rec["beta"] = to_json(beta);
        rec["depth"] = std::to_string(a.depth);
        rec["collisions"] = std::move(groups);
        emit_json(out, rec);
    } else if (collisions.empty()) {
        out << "no collisions up to depth " << a.depth << '\n';
    } else {
        for (const auto& g : collisions) {
            out << "largest " << to_decimal(g.largest) << '\n';
            for (const auto& m : g.members) out << "  " << path_label(m.path) << '\t' << m.ints.to_string() << '\n';
        }
    }
    return kSuccess;
}

int cmd_family(const std::string& n_text, std::uint64_t j_max, const Common& c, std::ostream& out) {
    IntRange ns = IntRange::parse(n_text);
    Json rows = Json::array();
    if (c.fmt() == Format::Text) out << "n\tS_n(0)\tS_n(1)\tb_n/a_n\tl_n\tr_n\n";
    for (std::uint64_t n = ns.first; n <= ns.last; ++n) {
        Family f = make_family(n);
        Seq cf = f.ratio_expansion();
        std::vector<BigInt> ls, rs;
        for (std::uint64_t j = 1; j <= j_max; ++j) {
            ls.push_back(l_seq(f, j));
            rs.push_back(r_seq(f, j));
        }
        if (c.fmt() == Format::Json) {
            Json row{{"n", std::to_string(n)},
                     {"a", to_decimal(f.a)},
                     {"b", to_decimal(f.b)},
                     {"s0", to_json(f.s0)},
                     {"s1", to_json(f.s1)},
                     {"cf", to_json(cf)},
                     {"cf_text", cf_text(cf)},
                     {"l", to_decimal(f.l)},
                     {"r", to_decimal(f.r)}};
            if (j_max > 0) {
                row["L"] = to_json(Seq(ls));
                row["R"] = to_json(Seq(rs));
            }
            rows.push_back(std::move(row));
        } else {
            out << n << '\t' << to_string(f.s0) << '\t' << to_string(f.s1) << '\t' << cf_text(cf) << '\t'
                << to_decimal(f.l) << '\t' << to_decimal(f.r) << '\n';
            if (j_max > 0) {
                out << "  L_" << n << "(1.." << j_max << ") = " << to_string(Seq(ls)) << '\n';
                out << "  R_" << n << "(1.." << j_max << ") = " << to_string(Seq(rs)) << '\n';
            }
        }
    }
    if (c.fmt() == Format::Json) {
        Json rec = header("family");
        rec["n_range"] = {{"first", std::to_string(ns.first)}, {"last", std::to_string(ns.last)}};
        rec["j_max"] = std::to_string(j_max);
        rec["families"] = std::move(rows);
        emit_json(out, rec);
    }
    return kSuccess;
}

const std::vector<std::string> kClaims = {"lemmaR", "lemmaL", "equiv", "prop2", "theorem1", "poly"};

std::vector<std::string> split_claims(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        if (item == "all") return kClaims;
        if (std::find(kClaims.begin(), kClaims.end(), item) == kClaims.end())
            throw DomainError("unknown claim '" + item + "'");
        if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    if (out.empty()) throw DomainError("no claims selected");
    return out;
}

std::string index_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_verify(const std::string& claims_text, const std::string& n_text, const std::string& j_text,
               const Common& c, std::ostream& out) {
    auto claims = split_claims(claims_text);
    IntRange ns = IntRange::parse(n_text);
    IntRange js = IntRange::parse(j_text);
    VerifyOptions opts{c.threads};

    VerificationReport report;
    for (const auto& claim : claims) {
        if (claim == "lemmaR") report.merge(verify_lemma_r(ns, js, opts));
        else if (claim == "lemmaL") report.merge(verify_lemma_l(ns, js, opts));
        else if (claim == "equiv") report.merge(verify_equivalence(ns, js, opts));
        else if (claim == "prop2") report.merge(verify_proposition2(ns, js, opts));
        else if (claim == "theorem1") report.merge(verify_theorem1(ns, js, opts));
        else if (claim == "poly") report.merge(verify_proof_identities());
    }
    report.sort();

    if (c.fmt() == Format::Json) {
        Json rec = header("verify");
        rec["claims"] = claims;
        rec["report"] = to_json(report);
        emit_json(out, rec);
    } else {
        for (const auto& ch : report.checks) {
            out << (ch.pass ? "PASS" : "FAIL") << '\t' << ch.claim << '\t' << index_text(ch.n) << '\t'
                << index_text(ch.j);
            if (!ch.pass) {
                for (const auto& w : ch.witnesses) out << '\t' << w.name << '=' << w.value;
            }
            out << '\n';
        }
        out << report.checks.size() << " checks, " << report.failure_count() << " failed\n";
    }
    return report.all_pass() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Markov trees: continuants, collisions, and counterexample checks",
                 "markov-lab"};
    app.require_subcommand(1);

    Common common;
    std::string expr;

    auto* cf = app.add_subcommand("cf", "Evaluate the continued fraction of a sequence");
    cf->add_option("expr", expr, "Sequence expression, e.g. \"2,1,3\"")->required();
    add_common(cf, common);

    auto* sine = app.add_subcommand("sine", "Integer sine of a sequence");
    sine->add_option("expr", expr, "Sequence expression, e.g. \"(4,4)^5(11,11)\"")->required();
    add_common(sine, common);

    TreeArgs tree_args;
    auto add_tree_opts = [&](CLI::App* sub) {
        sub->add_option("--alpha", tree_args.alpha, "Left seed expression")->required();
        sub->add_option("--beta", tree_args.beta, "Right seed expression")->required();
        sub->add_option("--depth", tree_args.depth, "Maximum vertex depth")->capture_default_str();
        sub->add_option("--max-depth-override", tree_args.max_depth, "Raise the depth guard")
            ->capture_default_str();
        add_common(sub, common);
    };
    auto* tree = app.add_subcommand("tree", "List the vertices of T(alpha, beta)");
    add_tree_opts(tree);
    auto* collide = app.add_subcommand("collide", "Find vertices sharing a largest element");
    add_tree_opts(collide);

    std::string n_text = "1..5";
    std::string j_text = "1..4";
    std::uint64_t j_max = 0;
    auto* family = app.add_subcommand("family", "Parameters of the counterexample families");
    family->add_option("-n", n_text, "n or n1..n2")->capture_default_str();
    family->add_option("-j", j_max, "Also list L_n(1..j) and R_n(1..j)")->capture_default_str();
    add_common(family, common);

    std::string claims = "all";
    auto* verify = app.add_subcommand("verify", "Run claim verifiers and print a pass/fail table");
    verify->add_option("--claims", claims, "Comma list of lemmaR,lemmaL,equiv,prop2,theorem1,poly or all")
        ->capture_default_str();
    verify->add_option("-n", n_text, "n or n1..n2")->capture_default_str();
    verify->add_option("-j", j_text, "j or j1..j2")->capture_default_str();
    add_common(verify, common);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*cf) return cmd_cf(expr, common, out);
        if (*sine) return cmd_sine(expr, common, out);
        if (*tree) return cmd_tree(tree_args, common, out);
        if (*collide) return cmd_collide(tree_args, common, out);
        if (*family) return cmd_family(n_text, j_max, common, out);
        if (*verify) return cmd_verify(claims, n_text, j_text, common, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << " (use --max-depth-override to raise it)\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace markov::cli
