#include "eog/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace eog {

Graph make_path(const std::vector<long long>& labels) {
    const int k = static_cast<int>(labels.size());
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.push_back({i, i + 1, labels[static_cast<std::size_t>(i)]});
    std::vector<std::string> names;
    for (int i = 0; i <= k; ++i) names.push_back("p" + std::to_string(i));
    return Graph(k + 1, std::move(es), std::move(names));
}

Bigraph make_signed_path(const std::vector<long long>& labels, bool starts_right) {
    Graph g = make_path(labels);
    std::vector<Side> sides;
    Side s = starts_right ? Side::Right : Side::Left;
    for (int v = 0; v < g.vertex_count(); ++v) {
        sides.push_back(s);
        s = opposite(s);
    }
    return Bigraph(std::move(g), std::move(sides));
}

namespace {

std::vector<long long> parse_labels(std::string_view body, std::string_view spec) {
    std::vector<long long> labels;
    if (body.empty()) throw Error("empty path spec '" + std::string(spec) + "'");
    if (body.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t end = body.find(',', pos);
            if (end == std::string_view::npos) end = body.size();
            std::string_view tok = body.substr(pos, end - pos);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw Error("malformed path spec '" + std::string(spec) + "'");
            labels.push_back(std::stoll(std::string(tok)));
            pos = end + 1;
        }
    } else {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed path spec '" + std::string(spec) + "'");
            labels.push_back(c - '0');
        }
    }
    std::vector<long long> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<long long>(i) + 1)
            throw Error("path labels must be a permutation of 1.." + std::to_string(sorted.size()) + " in '" +
                        std::string(spec) + "'");
    return labels;
}

}  // namespace

AnyGraph parse_path_spec(std::string_view spec) {
    if (spec.size() < 3 || spec.substr(0, 2) != "P:") throw Error("path spec must start with 'P:'");
    std::string_view body = spec.substr(2);
    if (body.front() == '+' || body.front() == '-') {
        bool right = body.front() == '+';
        return make_signed_path(parse_labels(body.substr(1), spec), right);
    }
    return make_path(parse_labels(body, spec));
}

Graph parse_path(std::string_view spec) {
    auto g = parse_path_spec(spec);
    if (!std::holds_alternative<Graph>(g)) throw Error("expected an unsigned path spec, got '" + std::string(spec) + "'");
    return std::get<Graph>(std::move(g));
}

Bigraph parse_bipath(std::string_view spec) {
    auto g = parse_path_spec(spec);
    if (!std::holds_alternative<Bigraph>(g)) throw Error("expected a signed path spec, got '" + std::string(spec) + "'");
    return std::get<Bigraph>(std::move(g));
}

AnyGraph parse_graph_text(std::string_view text) {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<int> side_of;  // -1 undeclared, 0 left, 1 right
    std::vector<Edge> edges;
    bool any_side = false;

    auto vertex = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<int>(names.size()));
        if (inserted) {
            names.push_back(name);
            side_of.push_back(-1);
        }
        return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto where = " (line " + std::to_string(lineno) + ")";
        if (tok.size() == 2 && (tok[0] == "L" || tok[0] == "R")) {
            if (!edges.empty()) throw Error("side declarations must precede edges" + where);
            int v = vertex(tok[1]);
            int s = tok[0] == "L" ? 0 : 1;
            if (side_of[static_cast<std::size_t>(v)] >= 0 && side_of[static_cast<std::size_t>(v)] != s)
                throw Error("vertex " + tok[1] + " declared on both sides" + where);
            side_of[static_cast<std::size_t>(v)] = s;
            any_side = true;
        } else if (tok.size() == 2 && tok[0] == "V") {
            vertex(tok[1]);
        } else if (tok.size() == 3) {
            long long label = 0;
            try {
                std::size_t used = 0;
                label = std::stoll(tok[2], &used);
                if (used != tok[2].size()) throw Error("");
            } catch (...) {
                throw Error("malformed label '" + tok[2] + "'" + where);
            }
            if (label <= 0) throw Error("labels must be positive integers" + where);
            int u = vertex(tok[0]);
            int v = vertex(tok[1]);
            edges.push_back({u, v, label});
        } else {
            throw Error("cannot parse '" + line + "'" + where);
        }
    }
    Graph g(static_cast<int>(names.size()), std::move(edges), names);
    if (!any_side) return g;
    std::vector<Side> sides;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (side_of[v] < 0) throw Error("bigraph file leaves vertex " + names[v] + " without a side");
        sides.push_back(side_of[v] == 0 ? Side::Left : Side::Right);
    }
    return Bigraph(std::move(g), std::move(sides));
}

AnyGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_text(ss.str());
}

AnyGraph load_graph(const std::string& spec_or_path) {
    if (spec_or_path.rfind("P:", 0) == 0) return parse_path_spec(spec_or_path);
    return read_graph_file(spec_or_path);
}

namespace {

void write_edges(std::ostream& out, const Graph& g) {
    for (int r = 0; r < g.edge_count(); ++r) {
        const Edge& e = g.edge(r);
        out << g.name(e.u) << ' ' << g.name(e.v) << ' ' << (r + 1) << '\n';
    }
}

}  // namespace

std::string to_text(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << "V " << g.name(v) << '\n';
    write_edges(out, g);
    return out.str();
}

std::string to_text(const Bigraph& b) {
    std::ostringstream out;
    for (int v = 0; v < b.vertex_count(); ++v) out << (b.side(v) == Side::Left ? "L " : "R ") << b.graph().name(v) << '\n';
    write_edges(out, b.graph());
    return out.str();
}

std::string to_text(const AnyGraph& g) {
    return std::visit([](const auto& x) { return to_text(x); }, g);
}

std::string path_spec(const Graph& g) {
    auto ranks = path_ranks(g);
    std::string s = "P:";
    const bool wide = ranks.size() >= 10;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (wide && i > 0) s += ',';
        s += std::to_string(ranks[i] + 1);
    }
    return s;
}

const Graph& underlying(const AnyGraph& g) {
    if (const auto* b = std::get_if<Bigraph>(&g)) return b->graph();
    return std::get<Graph>(g);
}

}  // namespace eog
