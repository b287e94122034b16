#include "cgrig/cli.hpp"

#include "cgrig/core_graph.hpp"
#include "cgrig/direction_network.hpp"
#include "cgrig/errors.hpp"
#include "cgrig/io.hpp"
#include "cgrig/linear_rep.hpp"
#include "cgrig/rigidity.hpp"
#include "cgrig/sparsity.hpp"
#include "cgrig/svg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

namespace cgrig {
namespace {

enum Exit { ok = 0, negative = 1, input_error = 2, internal_error = 3 };

struct Options {
    std::string verb;
    std::vector<std::string> files;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    int trials = default_trials;
    std::string format = "text";
    std::string window = "-2:2,-2:2";
    std::size_t jobs = 1;
    std::string basis = "1,0,0,1";
    std::string kind = "M222";
    std::string mode = "fp";
    bool dump = false;
};

struct Result {
    std::string out;
    std::string err;
    int code = ok;
};

// Thrown for bad flag values discovered after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<EdgeId>& ids) {
    std::ostringstream s;
    for (std::size_t i = 0; i < ids.size(); ++i) s << (i ? " " : "") << ids[i];
    return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Window parse_window(const std::string& text) {
    std::int64_t v[4];
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(text);
    in >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3];
    if (!in || c1 != ':' || c2 != ',' || c3 != ':' || in.peek() != std::char_traits<char>::eof()) {
        throw UsageError("--window expects a:b,c:d, got '" + text + "'");
    }
    if (v[1] < v[0] || v[3] < v[2]) throw UsageError("--window bounds are reversed");
    return {v[0], v[1], v[2], v[3]};
}

IntBasis parse_basis(const std::string& text) {
    std::int64_t v[4];
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(text);
    in >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3];
    if (!in || c1 != ',' || c2 != ',' || c3 != ',' || in.peek() != std::char_traits<char>::eof()) {
        throw UsageError("--basis expects a,b,c,d (columns (a,b) and (c,d)), got '" + text + "'");
    }
    return {{Color{v[0], v[1]}, Color{v[2], v[3]}}};
}

MatrixKind parse_kind(const std::string& k) {
    if (k == "M112") return MatrixKind::m112;
    if (k == "M222") return MatrixKind::m222;
    if (k == "M232") return MatrixKind::m232;
    throw UsageError("--kind must be M112, M222 or M232");
}

std::string counts_text(const CountReport& c) {
    std::ostringstream s;
    s << "n " << c.vertices << "  m " << c.edges << "  c " << c.components << "  rank " << c.z2_rank << "  f " << c.f;
    return s.str();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) return;
    }
    throw UsageError("format '" + o.format + "' is not available for '" + o.verb + "'");
}

Result cmd_check(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    const auto v = decide_rigidity(g, o.seed, o.trials);
    Result r;
    r.code = v.status == RigidityStatus::flexible ? negative : ok;
    if (o.format == "json") {
        r.out = verdict_json(v).dump(2) + "\n";
        return r;
    }
    std::ostringstream s;
    s << status_name(v.status) << '\n';
    s << "n " << g.vertex_count() << "  m " << g.edge_count() << "  rank " << v.rank << " of " << 2 * g.vertex_count() + 1
      << "  dof " << v.dof << '\n';
    if (v.circuit) s << "circuit: " << join(v.circuit->circuit) << '\n';
    r.out = s.str();
    return r;
}

Result cmd_sparsity(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    const auto all = g.all_edges();
    const auto counts = count_report(g, all);
    const bool laman_sparse = is_colored_laman_sparse(g);
    const bool laman = is_colored_laman(g);
    const bool sparse222 = is_222_sparse(g);
    const bool graph222 = is_222_graph(g);
    const std::size_t basis = maximal_laman_sparse_subset(g).size();
    Result r;
    r.code = laman_sparse ? ok : negative;
    if (o.format == "json") {
        Json j;
        j["counts"] = counts_json(counts);
        j["colored_laman_sparse"] = laman_sparse;
        j["colored_laman"] = laman;
        j["sparse_222"] = sparse222;
        j["graph_222"] = graph222;
        j["maximal_sparse_size"] = basis;
        r.out = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream s;
    s << counts_text(counts) << '\n'
      << "colored-Laman sparse: " << yes_no(laman_sparse) << '\n'
      << "colored-Laman: " << yes_no(laman) << '\n'
      << "(2,2,2)-sparse: " << yes_no(sparse222) << '\n'
      << "(2,2,k)-graph: " << yes_no(graph222) << '\n'
      << "maximal sparse subset: " << basis << " edges\n";
    r.out = s.str();
    return r;
}

Result cmd_decompose(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    Result r;
    if (!is_222_graph(g)) {
        r.code = negative;
        r.out = o.format == "json" ? std::string("{\n  \"graph_222\": false\n}\n") : "not a (2,2,k)-graph\n";
        return r;
    }
    const auto d = decompose_two_11k(g);
    const int k = z2_rank(g, g.all_edges());
    std::vector<std::string> shapes;
    if (k == 2) {
        for (const auto* part : {&d.part1, &d.part2}) {
            shapes.push_back(std::to_string(static_cast<int>(classify_11k_shape(g, *part).shape)));
        }
    }
    if (o.format == "json") {
        Json j;
        j["graph_222"] = true;
        j["k"] = k;
        j["part1"] = d.part1;
        j["part2"] = d.part2;
        if (!shapes.empty()) j["shapes"] = shapes;
        r.out = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream s;
    s << "k " << k << '\n' << "part 1: " << join(d.part1) << '\n' << "part 2: " << join(d.part2) << '\n';
    if (!shapes.empty()) s << "shapes: " << shapes[0] << ' ' << shapes[1] << '\n';
    r.out = s.str();
    return r;
}

Result cmd_circuit(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    Result r;
    if (is_colored_laman_sparse(g)) {
        r.out = o.format == "json" ? std::string("{\n  \"circuit\": null\n}\n")
                                   : "no circuit: graph is colored-Laman sparse\n";
        return r;
    }
    const auto c = find_laman_circuit(g);
    r.code = negative;
    if (o.format == "json") {
        Json j;
        j["circuit"] = circuit_json(c);
        r.out = j.dump(2) + "\n";
        return r;
    }
    r.out = "circuit: " + join(c.circuit) + "\n" + counts_text(c.counts) + "\n";
    return r;
}

Result cmd_realize(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json", "svg"});
    Result r;
    if (!is_colored_laman(g)) {
        r.code = negative;
        r.out = "not colored-Laman: no faithful realization\n";
        return r;
    }
    const auto f = faithful_realization(g, o.seed);
    const auto status = o.tol ? edge_status(g, f.directions, f.realization, *o.tol) : f.status;
    if (o.format == "json") {
        r.out = realization_json(f.realization, status, o.seed).dump(2) + "\n";
    } else if (o.format == "svg") {
        r.out = realization_svg(g, f.realization);
    } else {
        std::ostringstream s;
        s.precision(12);
        for (std::size_t i = 0; i < f.realization.p.size(); ++i) {
            s << "p" << i << ' ' << f.realization.p[i][0] << ' ' << f.realization.p[i][1] << '\n';
        }
        s << "L1 " << f.realization.L[0][0] << ' ' << f.realization.L[1][0] << '\n';
        s << "L2 " << f.realization.L[0][1] << ' ' << f.realization.L[1][1] << '\n';
        for (const auto& e : status) {
            s << "edge " << e.id << " alpha " << e.alpha << (e.collapsed ? " collapsed" : "") << '\n';
        }
        r.out = s.str();
    }
    return r;
}

Result cmd_develop(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json", "svg"});
    const auto dev = develop_window(g, parse_window(o.window));
    Result r;
    if (o.format == "svg") {
        r.out = development_svg(g, dev);
        return r;
    }
    if (o.format == "json") {
        Json j;
        Json comps = Json::array();
        for (const auto& p : dev.predictions) {
            Json c;
            c["vertices"] = p.vertices;
            c["rank"] = p.z2_rank;
            c["index"] = p.index ? Json(*p.index) : Json(nullptr);
            comps.push_back(std::move(c));
        }
        j["components"] = std::move(comps);
        j["observed_core_components"] = dev.observed_core_components;
        j["predicted_core_classes"] = dev.predicted_core_classes;
        r.out = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream s;
    for (std::size_t i = 0; i < dev.predictions.size(); ++i) {
        const auto& p = dev.predictions[i];
        s << "component " << i << ": rank " << p.z2_rank << "  index ";
        if (p.index) s << *p.index;
        else s << "infinite";
        s << '\n';
    }
    s << "core components: observed " << dev.observed_core_components << "  predicted " << dev.predicted_core_classes
      << '\n';
    r.out = s.str();
    return r;
}

Result cmd_cover(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    const IntBasis basis = parse_basis(o.basis);
    const ColoredGraph cover = sublattice_cover(g, basis);
    Result r;
    if (o.format == "json") {
        Json j;
        j["index"] = std::abs(basis.det());
        j["n"] = cover.vertex_count();
        j["m"] = cover.edge_count();
        j["maximal_sparse_size"] = maximal_laman_sparse_subset(cover).size();
        j["colored_laman"] = is_colored_laman(cover);
        j["graph"] = serialize_colored_graph(cover);
        r.out = j.dump(2) + "\n";
        return r;
    }
    r.out = serialize_colored_graph(cover);
    return r;
}

Result cmd_ross(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    const auto v = is_ross(g);
    Result r;
    r.code = v.is_ross ? ok : negative;
    if (o.format == "json") {
        Json j;
        j["ross"] = v.is_ross;
        j["direct"] = v.direct ? Json(*v.direct) : Json(nullptr);
        j["augmented"] = v.augmented;
        r.out = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream s;
    s << "Ross graph: " << yes_no(v.is_ross) << '\n'
      << "direct counts: " << (v.direct ? yes_no(*v.direct) : std::string("skipped (too many edges)")) << '\n'
      << "three-loop augmentation: " << yes_no(v.augmented) << '\n';
    r.out = s.str();
    return r;
}

Result cmd_oned(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    const auto v = is_1d_rigid(g, o.seed, o.trials);
    Result r;
    r.code = v.rigid ? ok : negative;
    const char* status = v.minimally_rigid ? "generically minimally rigid"
                         : v.rigid         ? "generically rigid, overconstrained"
                                           : "generically flexible";
    if (o.format == "json") {
        Json j;
        j["status"] = status;
        j["rank"] = v.rank;
        j["combinatorial"] = v.combinatorial;
        j["numeric"] = v.numeric;
        r.out = j.dump(2) + "\n";
        return r;
    }
    r.out = std::string(status) + " (1d)\nrank " + std::to_string(v.rank) + " of " +
            std::to_string(g.vertex_count()) + "\n";
    return r;
}

Result cmd_rank(const Options& o, const ColoredGraph& g) {
    require_format(o, {"text", "json"});
    const MatrixKind kind = parse_kind(o.kind);
    if (o.mode != "fp" && o.mode != "float") throw UsageError("--mode must be fp or float");
    const bool exact = o.mode == "fp";
    const double tol = o.tol.value_or(1e-9);
    const RankReport rep = exact ? rank_mod_p(g, kind, o.trials, o.seed)
                                 : rank_float_generic(g, kind, o.trials, o.seed, tol);
    std::string dump;
    if (o.dump) {
        Rng rng(o.seed);
        dump = exact ? dump_matrix(sample_matrix_fp(g, kind, rng)) : dump_matrix(sample_matrix_float(g, kind, rng));
    }
    Result r;
    if (o.format == "json") {
        Json j;
        j["kind"] = kind_name(kind);
        j["rank"] = rep.rank;
        j["mode"] = arithmetic_name(rep.mode);
        j["trials"] = rep.trials;
        j["seed"] = rep.seed;
        if (o.dump) j["matrix"] = dump;
        r.out = j.dump(2) + "\n";
        return r;
    }
    r.out = std::string(kind_name(kind)) + " rank " + std::to_string(rep.rank) + " (" +
            std::string(arithmetic_name(rep.mode)) + ", " + std::to_string(rep.trials) + " trials)\n" + dump;
    return r;
}

Result run_file(const Options& o, const std::string& path) {
    Result r;
    try {
        const ColoredGraph g = read_colored_graph(path);
        for (const auto& w : g.multiplicity_warnings()) r.err += "warning: " + path + ": " + w + "\n";
        Result body;
        if (o.verb == "check") body = cmd_check(o, g);
        else if (o.verb == "sparsity") body = cmd_sparsity(o, g);
        else if (o.verb == "decompose") body = cmd_decompose(o, g);
        else if (o.verb == "circuit") body = cmd_circuit(o, g);
        else if (o.verb == "realize") body = cmd_realize(o, g);
        else if (o.verb == "develop") body = cmd_develop(o, g);
        else if (o.verb == "cover") body = cmd_cover(o, g);
        else if (o.verb == "ross") body = cmd_ross(o, g);
        else if (o.verb == "oned") body = cmd_oned(o, g);
        else body = cmd_rank(o, g);
        r.out = std::move(body.out);
        r.err += body.err;
        r.code = body.code;
    } catch (const ParseError& e) {
        r.err += "error: " + path + ":" + e.what() + "\n";
        r.code = input_error;
    } catch (const InternalError& e) {
        r.err += "internal error: " + path + ": " + e.what() + "\n";
        r.code = internal_error;
    } catch (const GenericityError& e) {
        r.err += "genericity failure: " + path + ": " + e.what() + "\n";
        r.code = internal_error;
    } catch (const UsageError& e) {
        r.err += "error: " + std::string(e.what()) + "\n";
        r.code = input_error;
    } catch (const std::exception& e) {
        // Structural, domain and budget errors all reject the input.
        r.err += "error: " + path + ": " + e.what() + "\n";
        r.code = input_error;
    }
    return r;
}

} // namespace

CommandOutput run_command(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Generic rigidity of planar periodic frameworks from colored quotient graphs", "cgrig"};
    app.add_option("verb", o.verb, "check|sparsity|decompose|circuit|realize|develop|cover|ross|oned|rank")
        ->required()
        ->check(CLI::IsMember(
            {"check", "sparsity", "decompose", "circuit", "realize", "develop", "cover", "ross", "oned", "rank"}));
    app.add_option("files", o.files, ".cg input files")->required();
    app.add_option("--seed", o.seed, "seed for all randomness");
    app.add_option("--tol", o.tol, "floating tolerance (rank threshold, collapse threshold for realize)");
    app.add_option("--trials", o.trials, "random trials for generic rank")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--window", o.window, "development window a:b,c:d");
    app.add_option("--jobs", o.jobs, "files processed in parallel")->check(CLI::PositiveNumber);
    app.add_option("--basis", o.basis, "sublattice basis columns a,b,c,d for cover");
    app.add_option("--kind", o.kind, "matrix for rank: M112, M222 or M232");
    app.add_option("--mode", o.mode, "arithmetic for rank: fp or float");
    app.add_flag("--dump", o.dump, "print the first sampled matrix (rank)");

    CommandOutput result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = "error: " + std::string(e.what()) + "\n" + app.help();
        result.exit_code = input_error;
        return result;
    }
    if (o.tol && !(*o.tol > 0.0)) {
        result.err = "error: --tol must be positive\n";
        result.exit_code = input_error;
        return result;
    }

    std::vector<Result> results(o.files.size());
    if (o.jobs <= 1 || o.files.size() <= 1) {
        for (std::size_t i = 0; i < o.files.size(); ++i) results[i] = run_file(o, o.files[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        const std::size_t count = std::min(o.jobs, o.files.size());
        for (std::size_t w = 0; w < count; ++w) {
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < o.files.size(); i = next++) results[i] = run_file(o, o.files[i]);
            }));
        }
        for (auto& w : workers) w.get();
    }

    const bool headers = o.files.size() > 1;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (headers) result.out += "# " + o.files[i] + "\n";
        result.out += results[i].out;
        result.err += results[i].err;
        result.exit_code = std::max(result.exit_code, results[i].code);
    }
    return result;
}

} // namespace cgrig
