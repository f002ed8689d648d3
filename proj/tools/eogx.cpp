#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eog/classify.hpp"
#include "eog/containment.hpp"
#include "eog/io.hpp"
#include "eog/matrix01.hpp"
#include "eog/turan.hpp"
#include "eog/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Common {
    bool json_out = false;
    std::string out;
    long long budget_nodes = 0;
    double budget_secs = 0;
    int threads = 0;

    eog::Budget budget() const {
        eog::Budget b;
        b.nodes = budget_nodes;
        b.seconds = budget_secs;
        b.threads = threads;
        if (b.threads <= 0) {
            if (const char* env = std::getenv("EOGX_THREADS")) b.threads = std::atoi(env);
        }
        if (b.threads <= 0) b.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        return b;
    }
};

void add_budget_flags(CLI::App* app, Common& c) {
    app->add_option("--budget-nodes", c.budget_nodes, "Search node cap (0 = none)")->check(CLI::NonNegativeNumber);
    app->add_option("--budget-secs", c.budget_secs, "Wall-clock cap in seconds (0 = none)")->check(CLI::NonNegativeNumber);
    app->add_option("--threads", c.threads, "Worker threads (default: EOGX_THREADS or all cores)");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw eog::Error("cannot write " + path);
    f << text;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

eog::Matrix01 load_matrix(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) {
        std::ifstream f(spec);
        std::stringstream ss;
        ss << f.rdbuf();
        return eog::Matrix01::parse(ss.str());
    }
    return eog::Matrix01::parse(spec);
}

// classify -------------------------------------------------------------------

json evidence_json(const eog::Graph& g, const eog::Evidence& ev) {
    return std::visit(
        [&](const auto& e) -> json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, eog::LinearEvidence>) {
                json steps = json::array();
                for (const auto& s : e.extensions.steps)
                    steps.push_back({{"base", s.base}, {"left", s.left}, {"right", s.right}});
                return {{"kind", "linear"},
                        {"reversed", e.reversed},
                        {"colouring", e.colouring.colour},
                        {"close_class", e.colouring.close_class},
                        {"right_caterpillar", eog::to_text(e.right_caterpillar)},
                        {"depth", e.extensions.depth()},
                        {"extensions", steps}};
            } else if constexpr (std::is_same_v<T, eog::CycleEvidence>) {
                json names = json::array();
                for (int v : e.cycle) names.push_back(g.name(v));
                return {{"kind", "cycle"}, {"cycle", names}};
            } else if constexpr (std::is_same_v<T, eog::ForbiddenPathEvidence>) {
                return {{"kind", "forbidden_paths"},
                        {"forward", {{"pattern", e.forward.pattern}, {"map", e.forward.embedding.vertex_map}}},
                        {"reversed", {{"pattern", e.reversed.pattern}, {"map", e.reversed.embedding.vertex_map}}}};
            } else {
                return {{"kind", "colouring_failure"}};
            }
        },
        ev);
}

std::string evidence_text(const eog::Graph& g, const eog::Evidence& ev) {
    std::ostringstream os;
    std::visit(
        [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, eog::LinearEvidence>) {
                os << "semi-caterpillar: " << (e.reversed ? "reverse(G)" : "G") << "\n";
                os << "close colour class: " << e.colouring.close_class << "\n";
                os << "extension depth: " << e.extensions.depth() << "\n";
                for (const auto& s : e.extensions.steps)
                    os << "  base " << s.base << " left [" << join(s.left) << "] right [" << join(s.right) << "]\n";
                os << "right caterpillar:\n" << eog::to_text(e.right_caterpillar);
            } else if constexpr (std::is_same_v<T, eog::CycleEvidence>) {
                os << "cycle:";
                for (int v : e.cycle) os << ' ' << g.name(v);
                os << "\n";
            } else if constexpr (std::is_same_v<T, eog::ForbiddenPathEvidence>) {
                os << "G contains " << e.forward.pattern << " at [" << join(e.forward.embedding.vertex_map) << "]\n";
                os << "reverse(G) contains " << e.reversed.pattern << " at [" << join(e.reversed.embedding.vertex_map)
                   << "]\n";
            } else {
                os << "no proper 2-colouring has an all-close colour class\n";
            }
        },
        ev);
    return os.str();
}

int cmd_classify(const std::string& input, const Common& c) {
    const eog::AnyGraph any = eog::load_graph(input);
    const eog::Graph& g = eog::underlying(any);
    const bool path = eog::is_path(g) && g.edge_count() >= 2;
    const auto verdict = path ? eog::classify_path(g) : eog::classify_connected(g);
    if (c.json_out) {
        json j{{"input", input},
               {"growth", eog::to_string(verdict.growth)},
               {"summary", verdict.summary},
               {"evidence", evidence_json(g, verdict.evidence)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict.summary << "\n" << evidence_text(g, verdict.evidence);
    }
    return kOk;
}

// contain --------------------------------------------------------------------

int cmd_contain(const std::string& host, const std::string& pattern, const Common& c) {
    const eog::AnyGraph g = eog::load_graph(host);
    const eog::AnyGraph h = eog::load_graph(pattern);
    std::optional<eog::Embedding> emb;
    const auto* gb = std::get_if<eog::Bigraph>(&g);
    const auto* hb = std::get_if<eog::Bigraph>(&h);
    if (gb && hb)
        emb = eog::find_embedding(*gb, *hb);
    else
        emb = eog::find_embedding(eog::underlying(g), eog::underlying(h));

    const eog::Graph& gu = eog::underlying(g);
    const eog::Graph& hu = eog::underlying(h);
    if (c.json_out) {
        json j{{"contains", emb.has_value()}};
        if (emb) {
            json m = json::object();
            for (std::size_t i = 0; i < emb->vertex_map.size(); ++i)
                m[hu.name(static_cast<int>(i))] = gu.name(emb->vertex_map[i]);
            j["map"] = m;
        }
        std::cout << j.dump(2) << "\n";
    } else if (emb) {
        std::cout << "contains\n";
        for (std::size_t i = 0; i < emb->vertex_map.size(); ++i)
            std::cout << hu.name(static_cast<int>(i)) << " -> " << gu.name(emb->vertex_map[i]) << "\n";
    } else {
        std::cout << "avoids\n";
    }
    return emb ? kOk : kNegative;
}

// turan / table1 -------------------------------------------------------------

int cmd_turan(int n, const std::string& pattern, const Common& c) {
    const eog::Graph h = eog::underlying(eog::load_graph(pattern));
    const auto r = eog::exact_ex(n, h, c.budget());
    const std::string witness = eog::to_text(r.witness);
    if (!c.out.empty()) write_file(c.out, witness);
    if (c.json_out) {
        json j{{"n", n},
               {"pattern", pattern},
               {"value", r.value},
               {"status", eog::to_string(r.status)},
               {"nodes", r.nodes},
               {"witness", witness}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.value << " (" << eog::to_string(r.status) << ")\n";
        std::cout << "nodes: " << r.nodes << "\n";
        if (c.out.empty())
            std::cout << "# witness\n" << witness;
        else
            std::cout << "witness: " << c.out << "\n";
    }
    return r.status == eog::SearchStatus::Exact ? kOk : kBudget;
}

std::string chromatic_text(int chi) { return chi == 0 ? "inf" : std::to_string(chi); }

int cmd_table1(int max_n, const std::vector<std::string>& rows, const Common& c) {
    const auto entries = eog::table1_report(max_n, c.budget(), rows);
    if (!c.out.empty()) write_file(c.out, eog::table1_csv(entries));
    bool exact = true;
    for (const auto& e : entries)
        for (const auto& v : e.values) exact = exact && v.status == eog::SearchStatus::Exact;

    if (c.json_out) {
        json arr = json::array();
        for (const auto& e : entries) {
            json vals = json::array();
            for (const auto& v : e.values) vals.push_back({{"value", v.value}, {"status", eog::to_string(v.status)}});
            arr.push_back({{"path", e.row.labels},
                           {"chromatic", chromatic_text(e.row.chromatic)},
                           {"bound", e.row.bound},
                           {"expected", eog::to_string(e.row.expected)},
                           {"verdict", eog::to_string(e.verdict)},
                           {"ocn2", e.ocn2},
                           {"values", vals},
                           {"ground_truth", e.ground_truth}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& e : entries) {
            std::cout << e.row.labels << "  chi=" << chromatic_text(e.row.chromatic) << "  "
                      << eog::to_string(e.verdict) << "  ex:";
            for (const auto& v : e.values)
                std::cout << ' ' << v.value << (v.status == eog::SearchStatus::Exact ? "" : "+");
            std::cout << "  (" << e.ground_truth << ")\n";
        }
    }
    return exact ? kOk : kBudget;
}

// matrix ---------------------------------------------------------------------

std::string staircase_text(const eog::Staircase& s) {
    std::string t = s.column_reversed ? "column-reversed" : "plain";
    for (auto [i, j] : s.positions) t += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return t;
}

int cmd_matrix_classify(const std::string& input, const Common& c) {
    const eog::Matrix01 a = load_matrix(input);
    if (a.all_zero() || !eog::is_connected_matrix(a)) {
        const std::string why = a.all_zero() ? "all-zero" : eog::is_light(a) ? "light, disconnected" : "disconnected";
        if (c.json_out)
            std::cout << json{{"matrix", a.str()}, {"growth", "out of scope"}, {"reason", why}}.dump(2) << "\n";
        else
            std::cout << "out of scope (" << why << ")\n";
        return kNegative;
    }
    const auto v = eog::classify_matrix(a);
    if (c.json_out) {
        json j{{"matrix", a.str()}, {"growth", eog::to_string(v.growth)}, {"light", eog::is_light(a)}};
        if (v.staircase) j["staircase"] = staircase_text(*v.staircase);
        if (v.obstruction) j["obstruction"] = v.obstruction->str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << eog::to_string(v.growth);
        if (v.staircase) std::cout << " (staircase: " << staircase_text(*v.staircase) << ")";
        if (v.obstruction) std::cout << " (contains " << v.obstruction->str() << ")";
        std::cout << "\n";
    }
    return kOk;
}

int cmd_matrix_eex(int n, const std::string& input, const Common& c) {
    const eog::Matrix01 b = load_matrix(input);
    const auto r = eog::eex_exact(n, b, c.budget());
    if (!c.out.empty()) write_file(c.out, r.witness.str() + "\n");
    if (c.json_out) {
        std::cout << json{{"n", n},
                          {"pattern", b.str()},
                          {"value", r.value},
                          {"status", eog::to_string(r.status)},
                          {"nodes", r.nodes},
                          {"witness", r.witness.str()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << r.value << " (" << eog::to_string(r.status) << ")\n";
        std::cout << "nodes: " << r.nodes << "\n";
        std::cout << "witness: " << r.witness.str() << "\n";
    }
    return r.status == eog::SearchStatus::Exact ? kOk : kBudget;
}

int cmd_matrix_staircase(const std::string& input, const Common& c) {
    const eog::Matrix01 a = load_matrix(input);
    const auto s = eog::staircase_certificate(a);
    if (c.json_out) {
        json j{{"matrix", a.str()}, {"staircase", s.has_value()}};
        if (s) {
            json pos = json::array();
            for (auto [i, k] : s->positions) pos.push_back({i, k});
            j["positions"] = pos;
            j["column_reversed"] = s->column_reversed;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (s ? staircase_text(*s) : std::string("not a staircase matrix")) << "\n";
    }
    return s ? kOk : kNegative;
}

// verify ---------------------------------------------------------------------

json report_json(const std::vector<eog::VerifyReport>& reps) {
    json arr = json::array();
    for (const auto& r : reps) {
        json fails = json::array();
        for (const auto& f : r.failures) fails.push_back({{"check", f.check}, {"counterexample", f.counterexample}});
        json margins = json::array();
        for (const auto& m : r.margins)
            margins.push_back({{"bound", m.bound}, {"instances", m.instances}, {"worst_slack", m.worst_slack}});
        json counters = json::object();
        for (const auto& [k, v] : r.counters) counters[k] = v;
        arr.push_back({{"suite", r.suite},
                       {"instances", r.instances},
                       {"failure_count", r.failure_count},
                       {"failures", fails},
                       {"margins", margins},
                       {"counters", counters}});
    }
    return arr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string report_csv(const std::vector<eog::VerifyReport>& reps) {
    std::ostringstream os;
    os << "suite,kind,name,value,detail\n";
    for (const auto& r : reps) {
        os << r.suite << ",instances,," << r.instances << ",\n";
        os << r.suite << ",failures,," << r.failure_count << ",\n";
        for (const auto& m : r.margins)
            os << r.suite << ",margin," << csv_field(m.bound) << ',' << m.worst_slack << ",instances=" << m.instances
               << "\n";
        for (const auto& [k, v] : r.counters) os << r.suite << ",counter," << csv_field(k) << ',' << v << ",\n";
        for (const auto& f : r.failures)
            os << r.suite << ",failure," << csv_field(f.check) << ",," << csv_field(f.counterexample) << "\n";
    }
    return os.str();
}

int cmd_verify(const std::string& suite, const eog::VerifyOptions& base, const Common& c) {
    eog::VerifyOptions opt = base;
    opt.budget = c.budget();
    const auto reps = eog::run_suite(suite, opt);
    if (!c.out.empty()) {
        const bool csv = std::filesystem::path(c.out).extension() == ".csv";
        write_file(c.out, csv ? report_csv(reps) : report_json(reps).dump(2) + "\n");
    }
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.passed();
    if (c.json_out) {
        std::cout << report_json(reps).dump(2) << "\n";
    } else {
        for (const auto& r : reps) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  instances=" << r.instances
                      << "  failures=" << r.failure_count << "\n";
            for (const auto& m : r.margins)
                std::cout << "    margin  " << m.bound << "  slack=" << m.worst_slack << " over " << m.instances
                          << "\n";
            for (const auto& [k, v] : r.counters) std::cout << "    count   " << k << " = " << v << "\n";
            for (const auto& f : r.failures)
                std::cout << "    failure " << f.check << "\n" << f.counterexample << "\n";
        }
    }
    return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-ordered graph extremal toolkit"};
    app.require_subcommand(1);
    Common common;

    std::string input, host, pattern;
    int n = 0;
    std::vector<std::string> rows;
    std::string suite = "all";
    eog::VerifyOptions vopt;

    auto* classify = app.add_subcommand("classify", "Linear / n log n verdict for a connected graph or path");
    classify->add_option("input", input, "P:spec or graph file")->required();
    classify->add_flag("--json", common.json_out);

    auto* contain = app.add_subcommand("contain", "Order-respecting containment (exit 1 when the host avoids)");
    contain->add_option("host", host, "P:spec or graph file")->required();
    contain->add_option("pattern", pattern, "P:spec or graph file")->required();
    contain->add_flag("--json", common.json_out);

    auto* turan = app.add_subcommand("turan", "Exact ex_<(n, H) by exhaustive search");
    turan->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    turan->add_option("pattern", pattern, "P:spec or graph file")->required();
    turan->add_option("--out", common.out, "Write the witness graph here");
    turan->add_flag("--json", common.json_out);
    add_budget_flags(turan, common);

    auto* table1 = app.add_subcommand("table1", "Five-edge path table with exact small-n values");
    table1->add_option("--max-n", n, "Largest n")->required()->check(CLI::PositiveNumber);
    table1->add_option("--rows", rows, "Restrict to these label strings")->delimiter(',');
    table1->add_option("--out", common.out, "CSV report path");
    table1->add_flag("--json", common.json_out);
    add_budget_flags(table1, common);

    auto* matrix = app.add_subcommand("matrix", "0-1 matrix patterns");
    matrix->require_subcommand(1);
    auto* mclassify = matrix->add_subcommand("classify", "Linear / non-linear verdict for a connected matrix");
    mclassify->add_option("input", input, "Matrix file or inline rows (\"11;01\")")->required();
    mclassify->add_flag("--json", common.json_out);
    auto* meex = matrix->add_subcommand("eex", "Exact extremal function for n x n matrices");
    meex->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
    meex->add_option("input", input, "Matrix file or inline rows")->required();
    meex->add_option("--out", common.out, "Write the witness matrix here");
    meex->add_flag("--json", common.json_out);
    add_budget_flags(meex, common);
    auto* mstair = matrix->add_subcommand("staircase", "Staircase certificate (exit 1 when none)");
    mstair->add_option("input", input, "Matrix file or inline rows")->required();
    mstair->add_flag("--json", common.json_out);

    auto* verify = app.add_subcommand("verify", "Run invariant and oracle suites");
    verify->add_option("--suite", suite, "Suite name or all");
    verify->add_option("--seed", vopt.seed, "Random seed");
    verify->add_option("--samples", vopt.samples, "Random instances per suite")->check(CLI::NonNegativeNumber);
    verify->add_option("--exhaustive-edges", vopt.exhaustive_edges, "Edge limit for exhaustive bigraph sweeps");
    verify->add_option("--tree-edges", vopt.tree_edges, "Edge limit for exhaustive tree sweeps");
    verify->add_option("--max-vertices", vopt.max_vertices, "Vertex limit for random bigraphs");
    verify->add_option("--out", common.out, "Report path (.csv for CSV, JSON otherwise)");
    verify->add_flag("--json", common.json_out);
    add_budget_flags(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify) return cmd_classify(input, common);
        if (*contain) return cmd_contain(host, pattern, common);
        if (*turan) return cmd_turan(n, pattern, common);
        if (*table1) return cmd_table1(n, rows, common);
        if (*mclassify) return cmd_matrix_classify(input, common);
        if (*meex) return cmd_matrix_eex(n, input, common);
        if (*mstair) return cmd_matrix_staircase(input, common);
        if (*verify) return cmd_verify(suite, vopt, common);
    } catch (const eog::Error& e) {
        std::cerr << "eogx: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "eogx: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
