#include "blch/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "blch/augment.hpp"
#include "blch/dga.hpp"
#include "blch/families.hpp"
#include "blch/geography.hpp"
#include "blch/homotopy.hpp"
#include "blch/laurent.hpp"

namespace blch::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: blch <command> [input] [flags]\n"
    "\n"
    "input:    family <spec>   built-in family (see below)\n"
    "          --file <path>   DGA text file ('-' reads stdin)\n"
    "\n"
    "commands:\n"
    "  validate    check the grading and d^2 = 0 laws of a DGA\n"
    "  augs        enumerate augmentations (lexicographic order)\n"
    "  lin         Poincare polynomial of the linearized complex (--e1)\n"
    "  blch        Poincare polynomial of the bilinearized complex (--e1 --e2)\n"
    "  table       full bilinearized Poincare polynomial matrix\n"
    "  classes     DGA homotopy classes (--method witness|dimension|cross)\n"
    "  admissible  bLCH (default) or LCH (--lch) split of --poly at --n\n"
    "  realize     realization plan for a bLCH-admissible --poly at --n\n"
    "  connsum     connected-sum transform: --poly --n --vanishing|--nonvanishing,\n"
    "              or chain level on an input complex with --rho <names|zero>\n"
    "  family      emit a built-in family as text\n"
    "\n"
    "families: trefoil | trefoil-link k=<int> | hopf n=<int> k=<int>\n"
    "          multicopy N=<int> n=<int> | note k=<int> m=<int> n=<int>\n"
    "\n"
    "flags: --e1/--e2 <index or name=bit,...>  --method <m>  --cap <int>\n"
    "       --poly <string>  --n <int>  --rho <names|zero>  --lch\n"
    "       --vanishing  --nonvanishing  --json\n";

struct Options {
    std::string command;
    std::optional<std::string> file;
    std::vector<std::string> family;
    std::optional<std::string> e1, e2, method, poly, rho;
    std::optional<int> n;
    std::size_t cap = 24;
    bool json_out = false;
    bool lch = false;
    bool vanishing = false;
    bool nonvanishing = false;
};

int to_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty())
        throw UsageError("bad integer '" + s + "' for " + what);
    return v;
}

Options parse_args(const std::vector<std::string>& args) {
    Options opt;
    opt.command = args[0];

    std::vector<std::string> positionals;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> std::string {
            if (i + 1 >= args.size())
                throw UsageError(std::string(flag) + " needs a value");
            return args[++i];
        };
        if (a == "--file")
            opt.file = value("--file");
        else if (a == "--e1")
            opt.e1 = value("--e1");
        else if (a == "--e2")
            opt.e2 = value("--e2");
        else if (a == "--method")
            opt.method = value("--method");
        else if (a == "--poly")
            opt.poly = value("--poly");
        else if (a == "--rho")
            opt.rho = value("--rho");
        else if (a == "--n")
            opt.n = to_int(value("--n"), "--n");
        else if (a == "--cap") {
            int c = to_int(value("--cap"), "--cap");
            if (c < 0) throw UsageError("--cap must be nonnegative");
            opt.cap = static_cast<std::size_t>(c);
        } else if (a == "--json")
            opt.json_out = true;
        else if (a == "--lch")
            opt.lch = true;
        else if (a == "--vanishing")
            opt.vanishing = true;
        else if (a == "--nonvanishing")
            opt.nonvanishing = true;
        else if (a.rfind("--", 0) == 0)
            throw UsageError("unknown flag '" + a + "'");
        else
            positionals.push_back(a);
    }

    if (!positionals.empty()) {
        // "blch family <spec>" names the family directly; everywhere else the
        // spec appears as "... family <spec>".
        std::size_t first = 0;
        if (positionals[0] == "family")
            first = 1;
        else if (opt.command != "family")
            throw UsageError("unexpected argument '" + positionals[0] + "'");
        if (first >= positionals.size()) throw UsageError("family needs a name");
        opt.family.assign(positionals.begin() + first, positionals.end());
    }
    return opt;
}

using FamilyValue = std::variant<DGA, ChainComplex>;

FamilyValue build_family(const std::vector<std::string>& tokens) {
    const std::string& id = tokens[0];
    std::map<std::string, int> params;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::size_t eq = tokens[i].find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("bad family parameter '" + tokens[i] + "'");
        params[tokens[i].substr(0, eq)] =
            to_int(tokens[i].substr(eq + 1), "family parameter " + tokens[i]);
    }
    auto need = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end())
            throw UsageError("family " + id + " needs parameter " + key + "=<int>");
        return it->second;
    };
    auto expect_params = [&](std::initializer_list<const char*> keys) {
        if (params.size() != keys.size())
            throw UsageError("family " + id + " takes exactly " +
                             std::to_string(keys.size()) + " parameter(s)");
    };

    if (id == "trefoil") {
        expect_params({});
        return families::trefoil_dga();
    }
    if (id == "trefoil-link") {
        expect_params({"k"});
        return families::trefoil_link_dga(need("k"));
    }
    if (id == "hopf") {
        expect_params({"n", "k"});
        return families::hopf_dga(need("n"), need("k"));
    }
    if (id == "multicopy") {
        expect_params({"N", "n"});
        return families::multicopy_complex(need("N"), need("n"));
    }
    if (id == "note") {
        expect_params({"k", "m", "n"});
        return families::note_subcomplex(need("k"), need("m"), need("n"));
    }
    throw UsageError("unknown family '" + id + "'");
}

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cli: cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FamilyValue load_input(const Options& opt) {
    if (opt.file && !opt.family.empty())
        throw UsageError("give either --file or a family spec, not both");
    if (opt.file) return parse_dga(read_input_file(*opt.file));
    if (!opt.family.empty()) return build_family(opt.family);
    throw UsageError("missing input: give --file <path> or family <spec>");
}

DGA load_dga(const Options& opt) {
    FamilyValue v = load_input(opt);
    if (std::holds_alternative<ChainComplex>(v))
        throw InputError("cli: this command needs a DGA, but the input is a chain complex");
    return std::get<DGA>(std::move(v));
}

Augmentation parse_selector(const DGA& dga, const std::string& sel, std::size_t cap) {
    const bool digits = !sel.empty() &&
                        std::all_of(sel.begin(), sel.end(), [](unsigned char c) {
                            return std::isdigit(c);
                        });
    if (digits) {
        const auto augs = enumerate_augmentations(dga, cap);
        const std::size_t idx = std::stoul(sel);
        if (idx >= augs.size())
            throw InputError("cli: augmentation index " + sel + " out of range (" +
                             std::to_string(augs.size()) + " augmentations)");
        return augs[idx];
    }

    std::map<std::string, int> values;
    std::size_t start = 0;
    while (start <= sel.size()) {
        std::size_t comma = sel.find(',', start);
        std::string item = sel.substr(start, comma - start);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            throw InputError("cli: bad augmentation selector item '" + item + "'");
        values[item.substr(0, eq)] = to_int(item.substr(eq + 1), "augmentation bit");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    Augmentation eps(dga, values);
    if (!is_augmentation(dga, eps))
        throw InputError("cli: assignment '" + sel + "' is not an augmentation");
    return eps;
}

std::string aug_label(const DGA& dga, const Augmentation& eps) {
    const std::string s = eps.to_string(dga);
    return s.empty() ? "(none)" : s;
}

int cmd_validate(const Options& opt, std::ostream& out) {
    const DGA dga = load_dga(opt);
    const auto issues = validate(dga);
    if (opt.json_out) {
        json problems = json::array();
        for (const auto& issue : issues) {
            problems.push_back(
                {{"kind", issue.kind == ValidationIssue::Kind::Degree ? "degree" : "d2"},
                 {"generator", issue.generator},
                 {"message", issue.message}});
        }
        out << json{{"schema", 1}, {"valid", issues.empty()}, {"problems", problems}}
                   .dump(2)
            << "\n";
    } else if (issues.empty()) {
        out << "valid\n";
    } else {
        for (const auto& issue : issues) {
            out << (issue.kind == ValidationIssue::Kind::Degree ? "degree: " : "d2: ")
                << issue.message << "\n";
        }
    }
    return issues.empty() ? 0 : 1;
}

int cmd_augs(const Options& opt, std::ostream& out) {
    const DGA dga = load_dga(opt);
    const auto augs = enumerate_augmentations(dga, opt.cap);
    if (opt.json_out) {
        json list = json::array();
        for (const auto& eps : augs) {
            json item = json::object();
            for (GenIndex i : dga.indices_of_degree(0))
                item[dga.generators[i].name] = eps.value(i);
            list.push_back(item);
        }
        out << json{{"schema", 1}, {"augmentations", list}}.dump(2) << "\n";
    } else {
        for (const auto& eps : augs) out << aug_label(dga, eps) << "\n";
    }
    return 0;
}

int cmd_poincare(const Options& opt, std::ostream& out, bool bilinear) {
    const DGA dga = load_dga(opt);
    if (!opt.e1) throw UsageError("--e1 is required");
    if (bilinear && !opt.e2) throw UsageError("--e2 is required");
    const Augmentation e1 = parse_selector(dga, *opt.e1, opt.cap);
    const Augmentation e2 = bilinear ? parse_selector(dga, *opt.e2, opt.cap) : e1;
    const LaurentPolynomial p = poincare(bilinearize(dga, e1, e2));
    if (opt.json_out)
        out << json{{"schema", 1}, {"poincare", p.to_string()}}.dump(2) << "\n";
    else
        out << p.to_string() << "\n";
    return 0;
}

int cmd_table(const Options& opt, std::ostream& out) {
    const DGA dga = load_dga(opt);
    const auto augs = enumerate_augmentations(dga, opt.cap);
    const auto table = blch_table(dga, opt.cap);
    const std::size_t m = augs.size();

    if (opt.json_out) {
        json labels = json::array();
        for (const auto& eps : augs) labels.push_back(eps.to_string(dga));
        json rows = json::array();
        for (const auto& row : table) {
            json cells = json::array();
            for (const auto& cell : row) cells.push_back(cell.to_string());
            rows.push_back(cells);
        }
        out << json{{"schema", 1}, {"augmentations", labels}, {"table", rows}}.dump(2)
            << "\n";
        return 0;
    }

    out << "# augmentations\n";
    for (std::size_t i = 0; i < m; ++i)
        out << i << ": " << aug_label(dga, augs[i]) << "\n";
    out << "# table (row eps1, column eps2)\n";
    if (m == 0) return 0;

    std::vector<std::string> headers(m);
    std::size_t width = 0;
    for (std::size_t j = 0; j < m; ++j) {
        headers[j] = "[" + std::to_string(j) + "]";
        width = std::max(width, headers[j].size());
    }
    for (const auto& row : table)
        for (const auto& cell : row) width = std::max(width, cell.to_string().size());

    auto pad = [&](const std::string& s) {
        return std::string(width - s.size(), ' ') + s;
    };
    out << std::string(width, ' ');
    for (std::size_t j = 0; j < m; ++j) out << "  " << pad(headers[j]);
    out << "\n";
    for (std::size_t i = 0; i < m; ++i) {
        out << pad(headers[i]);
        for (std::size_t j = 0; j < m; ++j) out << "  " << pad(table[i][j].to_string());
        out << "\n";
    }
    return 0;
}

HomotopyMethod parse_method(const std::optional<std::string>& m) {
    if (!m || *m == "witness") return HomotopyMethod::Witness;
    if (*m == "dimension") return HomotopyMethod::Dimension;
    if (*m == "cross") return HomotopyMethod::CrossCheck;
    throw UsageError("unknown method '" + *m + "' (use witness|dimension|cross)");
}

const char* method_name(HomotopyMethod m) {
    switch (m) {
        case HomotopyMethod::Witness: return "witness";
        case HomotopyMethod::Dimension: return "dimension";
        default: return "cross";
    }
}

int cmd_classes(const Options& opt, std::ostream& out) {
    const DGA dga = load_dga(opt);
    const HomotopyMethod method = parse_method(opt.method);
    const HomotopyPartition part = homotopy_classes(dga, method, opt.cap);

    if (opt.json_out) {
        json classes = json::array();
        for (const auto& cls : part.classes) classes.push_back(cls);
        out << json{{"schema", 1}, {"method", method_name(method)}, {"classes", classes}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << part.classes.size() << " classes\n";
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        out << "class " << c << ":";
        for (std::size_t member : part.classes[c]) out << " " << member;
        out << "\n";
    }
    return 0;
}

int cmd_admissible(const Options& opt, std::ostream& out) {
    if (!opt.poly) throw UsageError("--poly is required");
    if (!opt.n) throw UsageError("--n is required");
    const LaurentPolynomial P = LaurentPolynomial::parse(*opt.poly);
    const auto split = opt.lch ? lch_admissible_split(P, *opt.n)
                               : blch_admissible_split(P, *opt.n);
    const char* mode = opt.lch ? "lch" : "blch";

    if (opt.json_out) {
        json j{{"schema", 1}, {"mode", mode}, {"admissible", split.has_value()}};
        if (split) {
            j["q"] = split->q.to_string();
            j["p"] = split->p.to_string();
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (!split) {
        out << "not admissible\n";
        return 0;
    }
    out << "q: " << split->q.to_string() << "\n";
    out << "p: " << split->p.to_string() << "\n";
    return 0;
}

int cmd_realize(const Options& opt, std::ostream& out) {
    if (!opt.poly) throw UsageError("--poly is required");
    if (!opt.n) throw UsageError("--n is required");
    const LaurentPolynomial P = LaurentPolynomial::parse(*opt.poly);
    const RealizationPlan plan = plan_realization(P, *opt.n);

    if (opt.json_out) {
        json pairs = json::array();
        for (const auto& pr : plan.pairs)
            pairs.push_back(
                {{"u", pr.u}, {"v", pr.v}, {"m", pr.m}, {"k", pr.k}, {"a", pr.a}});
        out << json{{"schema", 1},
                    {"n", plan.n},
                    {"q", plan.q.to_string()},
                    {"pairs", pairs},
                    {"N", plan.copies},
                    {"predicted", plan.predicted.to_string()}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "n: " << plan.n << "\n";
    out << "q: " << plan.q.to_string() << "\n";
    for (const auto& pr : plan.pairs)
        out << "pair: u=" << pr.u << " v=" << pr.v << " m=" << pr.m << " k=" << pr.k
            << " a=" << pr.a << "\n";
    out << "N: " << plan.copies << "\n";
    out << "predicted: " << plan.predicted.to_string() << "\n";
    return 0;
}

int cmd_connsum(const Options& opt, std::ostream& out) {
    if (opt.poly) {
        if (!opt.n) throw UsageError("--n is required with --poly");
        if (opt.vanishing == opt.nonvanishing)
            throw UsageError("give exactly one of --vanishing / --nonvanishing");
        const LaurentPolynomial P = LaurentPolynomial::parse(*opt.poly);
        const LaurentPolynomial result = connected_sum_polynomial(P, *opt.n, opt.vanishing);
        if (opt.json_out)
            out << json{{"schema", 1}, {"poincare", result.to_string()}}.dump(2) << "\n";
        else
            out << result.to_string() << "\n";
        return 0;
    }

    if (!opt.rho) throw UsageError("chain-level connsum needs --rho <names|zero>");
    FamilyValue input = load_input(opt);

    std::optional<ChainComplex> cx;
    if (std::holds_alternative<DGA>(input)) {
        const DGA& dga = std::get<DGA>(input);
        if (!opt.e1 || !opt.e2)
            throw UsageError("chain-level connsum on a DGA needs --e1 and --e2");
        cx = bilinearize(dga, parse_selector(dga, *opt.e1, opt.cap),
                         parse_selector(dga, *opt.e2, opt.cap));
    } else {
        cx = std::get<ChainComplex>(std::move(input));
    }

    std::set<std::string> rho;
    if (*opt.rho != "zero") {
        std::size_t start = 0;
        while (start <= opt.rho->size()) {
            std::size_t comma = opt.rho->find(',', start);
            std::string name = opt.rho->substr(start, comma - start);
            if (name.empty()) throw UsageError("empty name in --rho");
            rho.insert(name);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    const ChainComplex result = families::attach_s(*cx, cx->ambient_dim(), rho);
    const LaurentPolynomial p = poincare(result);
    if (opt.json_out)
        out << json{{"schema", 1}, {"poincare", p.to_string()}}.dump(2) << "\n";
    else
        out << p.to_string() << "\n";
    return 0;
}

int cmd_family(const Options& opt, std::ostream& out) {
    if (opt.family.empty()) throw UsageError("family command needs a family spec");
    FamilyValue v = build_family(opt.family);

    if (std::holds_alternative<DGA>(v)) {
        const DGA& dga = std::get<DGA>(v);
        if (opt.json_out)
            out << json{{"schema", 1}, {"kind", "dga"}, {"text", serialize(dga)}}.dump(2)
                << "\n";
        else
            out << serialize(dga);
        return 0;
    }

    const ChainComplex& cx = std::get<ChainComplex>(v);
    if (opt.json_out) {
        json basis = json::array();
        json boundary = json::object();
        for (std::uint32_t i = 0; i < cx.basis().size(); ++i) {
            basis.push_back(
                {{"name", cx.basis()[i].name}, {"degree", cx.basis()[i].degree}});
            json targets = json::array();
            for (std::uint32_t t : cx.boundary_of(i)) targets.push_back(cx.basis()[t].name);
            boundary[cx.basis()[i].name] = targets;
        }
        out << json{{"schema", 1},
                    {"kind", "complex"},
                    {"dim", cx.ambient_dim()},
                    {"basis", basis},
                    {"boundary", boundary}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "dim " << cx.ambient_dim() << "\n";
    for (const auto& b : cx.basis()) out << "basis " << b.name << " " << b.degree << "\n";
    for (std::uint32_t i = 0; i < cx.basis().size(); ++i) {
        out << "d " << cx.basis()[i].name << " = ";
        if (cx.boundary_of(i).empty()) {
            out << "0";
        } else {
            bool first = true;
            for (std::uint32_t t : cx.boundary_of(i)) {
                if (!first) out << " + ";
                first = false;
                out << cx.basis()[t].name;
            }
        }
        out << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
        out << kUsage;
        return 0;
    }

    try {
        const Options opt = parse_args(args);
        if (cmd == "validate") return cmd_validate(opt, out);
        if (cmd == "augs") return cmd_augs(opt, out);
        if (cmd == "lin") return cmd_poincare(opt, out, false);
        if (cmd == "blch") return cmd_poincare(opt, out, true);
        if (cmd == "table") return cmd_table(opt, out);
        if (cmd == "classes") return cmd_classes(opt, out);
        if (cmd == "admissible") return cmd_admissible(opt, out);
        if (cmd == "realize") return cmd_realize(opt, out);
        if (cmd == "connsum") return cmd_connsum(opt, out);
        if (cmd == "family") return cmd_family(opt, out);
        throw UsageError("unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        err << kUsage;
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace blch::cli
