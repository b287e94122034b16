#include "cgrig/io.hpp"

#include "cgrig/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cgrig {
namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

std::int64_t to_int(const Token& t, std::size_t line, const char* what) {
    std::int64_t v = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(std::string(what) + " must be an integer, got '" + std::string(t.text) + "'", line, t.column);
    }
    return v;
}

} // namespace

ColoredGraph parse_colored_graph(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<ColoredGraph::EdgeSpec> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens[0].text != "cg") throw ParseError("expected magic 'cg'", line_no, tokens[0].column);
            if (tokens.size() != 4) {
                throw ParseError("header must be 'cg <dimension> <n> <m>'", line_no, tokens[0].column);
            }
            const std::int64_t dim = to_int(tokens[1], line_no, "dimension");
            if (dim != 2) {
                throw ParseError("unsupported dimension " + std::to_string(dim) + " (only 2 is supported)", line_no,
                                 tokens[1].column);
            }
            n = to_int(tokens[2], line_no, "vertex count");
            m = to_int(tokens[3], line_no, "edge count");
            if (n < 0) throw ParseError("vertex count is negative", line_no, tokens[2].column);
            if (m < 0) throw ParseError("edge count is negative", line_no, tokens[3].column);
            have_header = true;
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) == m) {
            throw ParseError("more edge lines than the declared " + std::to_string(m), line_no, tokens[0].column);
        }
        if (tokens.size() != 4) {
            throw ParseError("edge line must be '<tail> <head> <g1> <g2>'", line_no, tokens[0].column);
        }
        const std::int64_t tail = to_int(tokens[0], line_no, "tail");
        const std::int64_t head = to_int(tokens[1], line_no, "head");
        if (tail < 0 || tail >= n) throw ParseError("tail vertex out of range", line_no, tokens[0].column);
        if (head < 0 || head >= n) throw ParseError("head vertex out of range", line_no, tokens[1].column);
        const std::int64_t g1 = to_int(tokens[2], line_no, "color");
        const std::int64_t g2 = to_int(tokens[3], line_no, "color");
        edges.push_back({static_cast<VertexId>(tail), static_cast<VertexId>(head), Color{g1, g2}});
    }
    if (!have_header) throw ParseError("missing 'cg' header", line_no, 1);
    if (static_cast<std::int64_t>(edges.size()) != m) {
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()),
                         line_no, 1);
    }
    return ColoredGraph(static_cast<std::size_t>(n), edges);
}

ColoredGraph read_colored_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_colored_graph(buf.str());
}

std::string serialize_colored_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "cg 2 " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        out << e.tail << ' ' << e.head << ' ' << e.color.g1 << ' ' << e.color.g2 << '\n';
    }
    return out.str();
}

std::string dump_matrix(const MatrixFp& m) {
    std::ostringstream out;
    out << "mat " << m.rows() << ' ' << m.cols() << " fp\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).value();
        out << '\n';
    }
    return out.str();
}

std::string dump_matrix(const MatrixD& m) {
    std::ostringstream out;
    out.precision(17);
    out << "mat " << m.rows() << ' ' << m.cols() << " float\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
    return out.str();
}

Json realization_json(const Realization& r, const std::vector<EdgeStatus>& status, std::uint64_t seed) {
    Json j;
    j["n"] = r.p.size();
    Json p = Json::array();
    for (const auto& q : r.p) p.push_back({q[0], q[1]});
    j["p"] = std::move(p);
    j["L"] = {{r.L[0][0], r.L[0][1]}, {r.L[1][0], r.L[1][1]}};
    Json edges = Json::array();
    for (const auto& s : status) {
        Json e;
        e["id"] = s.id;
        e["alpha"] = s.alpha;
        e["collapsed"] = s.collapsed;
        edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    j["seed"] = seed;
    return j;
}

Json counts_json(const CountReport& c) {
    Json j;
    j["n"] = c.vertices;
    j["m"] = c.edges;
    j["c"] = c.components;
    j["rank"] = c.z2_rank;
    j["f"] = c.f;
    return j;
}

Json circuit_json(const CircuitReport& c) {
    Json j;
    j["edges"] = c.circuit;
    j["counts"] = counts_json(c.counts);
    return j;
}

Json verdict_json(const RigidityVerdict& v) {
    Json j;
    j["status"] = v.status == RigidityStatus::minimally_rigid         ? "generically_minimally_rigid"
                  : v.status == RigidityStatus::rigid_overconstrained ? "generically_rigid_overconstrained"
                                                                      : "generically_flexible";
    j["rank"] = v.rank;
    j["sparse_size"] = v.sparse_size;
    j["dof"] = v.dof;
    if (v.witness) {
        Json w;
        w["p"] = Json::array();
        for (const auto& q : v.witness->p) w["p"].push_back({q[0], q[1]});
        w["L"] = {{v.witness->L[0][0], v.witness->L[0][1]}, {v.witness->L[1][0], v.witness->L[1][1]}};
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["circuit"] = v.circuit ? circuit_json(*v.circuit) : Json(nullptr);
    j["seed"] = v.seed;
    return j;
}

} // namespace cgrig
