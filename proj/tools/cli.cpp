#include "cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "localcross/crossings.hpp"
#include "localcross/errors.hpp"
#include "localcross/generators.hpp"
#include "localcross/one_sided.hpp"
#include "localcross/oracle.hpp"
#include "localcross/outer.hpp"
#include "localcross/reductions.hpp"
#include "localcross/two_sided.hpp"
#include "render.hpp"

namespace localcross::cli {

namespace {

using nlohmann::json;

// Above this budget the XP solvers are not expected to finish at desk scale.
constexpr std::int64_t kPracticalK = 3;

struct SolveRequest {
    std::string problem;
    std::optional<std::string> mode_name;
    SolverOptions options;
    bool oracle = false;
    bool verify = false;
    bool timing = false;
    std::optional<std::string> cert_path;
};

struct RunReport {
    std::string file;
    std::string problem;
    std::string digest;
    std::int64_t k = 0;
    std::string answer;
    std::string certificate_path;
    double wall_ms = 0;
    SolveStats stats;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

WeightMode parse_mode(const std::string& s) {
    if (s == "count") return WeightMode::Count;
    if (s == "sum") return WeightMode::Sum;
    if (s == "product") return WeightMode::Product;
    throw InputError("unknown weight mode " + s);
}

WeightMode effective_mode(const SolveRequest& req, const InstanceFile& f) {
    if (req.mode_name) return parse_mode(*req.mode_name);
    return f.graph.is_weighted() ? WeightMode::Sum : WeightMode::Count;
}

int checked_int(std::int64_t k) {
    if (k < 0) throw InputError("k must be nonnegative");
    if (k > INT_MAX) throw InputError("k is too large for this problem");
    return static_cast<int>(k);
}

BipartiteInstance one_sided_instance(const InstanceFile& f) {
    auto inst = to_bipartite(f);
    if (!inst.fixed_x_order()) throw InputError("one-sided recognition needs an 'order:' line");
    return inst;
}

std::optional<Certificate> solve(const InstanceFile& f, const std::string& problem, std::int64_t k,
                                 WeightMode mode, const SolverOptions& opt, SolveStats& stats) {
    Certificate c;
    c.problem = problem;
    c.k = k;
    c.instance_hash = instance_digest(f);
    c.mode = mode;
    if (problem == "one-sided") {
        auto inst = one_sided_instance(f);
        auto d = mode == WeightMode::Count
                     ? solve_one_sided(inst, checked_int(k), opt, &stats)
                     : solve_one_sided_weighted(inst, k, mode, opt, &stats);
        if (!d) return std::nullopt;
        c.two_layer = *d;
    } else if (problem == "two-sided") {
        if (mode != WeightMode::Count) throw InputError("two-sided recognition is unweighted");
        auto d = solve_two_sided(to_bipartite(f).without_x_order(), checked_int(k), opt, &stats);
        if (!d) return std::nullopt;
        c.two_layer = *d;
    } else {
        if (mode != WeightMode::Count) throw InputError("outer recognition is unweighted");
        auto d = solve_outer(f.graph, checked_int(k), opt, &stats);
        if (!d) return std::nullopt;
        c.circular = *d;
    }
    return c;
}

// nullopt when the oracle is above its caps.
std::optional<bool> oracle_answer(const InstanceFile& f, const std::string& problem, std::int64_t k,
                                  WeightMode mode) {
    try {
        if (problem == "one-sided") return oracle_one_sided(one_sided_instance(f), k, mode).has_value();
        if (problem == "two-sided")
            return oracle_two_sided(to_bipartite(f).without_x_order(), checked_int(k)).has_value();
        return oracle_outer(f.graph, checked_int(k)).has_value();
    } catch (const ResourceError&) {
        return std::nullopt;
    }
}

void print_report(const RunReport& r, bool timing, std::ostream& out) {
    out << "file: " << r.file << "\n";
    out << "problem: " << r.problem << "\n";
    out << "digest: " << r.digest << "\n";
    out << "k: " << r.k << "\n";
    out << "answer: " << r.answer << "\n";
    if (!r.certificate_path.empty()) out << "certificate: " << r.certificate_path << "\n";
    out << "entries_created: " << r.stats.entries_created << "\n";
    out << "peak_entries: " << r.stats.peak_entries << "\n";
    if (timing) out << "wall_ms: " << r.wall_ms << "\n";
}

std::string default_cert_path(const std::string& file, const std::string& problem) {
    return file + "." + problem + ".cert.json";
}

// Writes, re-reads and re-checks a certificate. Returns an exit code.
int emit_certificate(const Certificate& c, const InstanceFile& f, const std::string& path,
                     bool reread, std::ostream& out, std::ostream& err) {
    if (auto why = certificate_problem(c, f); !why.empty()) {
        err << "error: solver certificate failed verification: " << why << "\n";
        return kMismatch;
    }
    write_text_file(path, certificate_to_json(c));
    if (reread) {
        auto back = parse_certificate_json(read_file(path));
        if (back.instance_hash != instance_digest(f) || !certificate_problem(back, f).empty()) {
            err << "error: written certificate does not re-verify\n";
            return kMismatch;
        }
        out << "verify: ok\n";
    }
    return kYes;
}

int recognize_one(const std::string& file, std::int64_t k, const SolveRequest& req,
                  std::ostream& out, std::ostream& err) {
    try {
        auto f = read_instance_file(file);
        RunReport r;
        r.file = file;
        r.problem = req.problem;
        r.digest = instance_digest(f);
        r.k = k;
        WeightMode mode = effective_mode(req, f);
        auto t0 = std::chrono::steady_clock::now();
        std::optional<Certificate> cert;
        try {
            cert = solve(f, req.problem, k, mode, req.options, r.stats);
        } catch (const ResourceError& e) {
            r.answer = "RESOURCE";
            r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            print_report(r, req.timing, out);
            err << "error: " << e.what() << "\n";
            return kResource;
        }
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        r.answer = cert ? "YES" : "NO";
        int code = cert ? kYes : kNo;
        if (cert) {
            r.certificate_path = req.cert_path ? *req.cert_path : default_cert_path(file, req.problem);
        }
        print_report(r, req.timing, out);
        if (cert) {
            int c = emit_certificate(*cert, f, r.certificate_path, req.verify, out, err);
            if (c != kYes) return c;
        }
        if (req.oracle) {
            auto want = oracle_answer(f, req.problem, k, mode);
            if (!want) {
                out << "oracle: skipped (above cap)\n";
            } else if (*want != cert.has_value()) {
                out << "oracle: MISMATCH (oracle says " << (*want ? "YES" : "NO") << ")\n";
                err << "error: oracle mismatch on " << file << "\n";
                return kMismatch;
            } else {
                out << "oracle: agree\n";
            }
        }
        return code;
    } catch (const InputError& e) {
        err << "error: " << file << ": " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
}

int cmd_recognize(const std::vector<std::string>& files, std::int64_t k, const SolveRequest& req,
                  std::ostream& out, std::ostream& err) {
    if (files.size() > 1 && req.cert_path) throw InputError("--cert needs a single input file");
    if (files.size() == 1 || req.options.jobs <= 1)  {
        int worst = kYes;
        for (std::size_t i = 0; i < files.size(); ++i) {
            if (i) out << "\n";
            worst = std::max(worst, recognize_one(files[i], k, req, out, err));
        }
        return worst;
    }
    // Batch mode: one sequential solver per instance, reports in input order.
    SolveRequest single = req;
    single.options.jobs = 1;
    std::vector<std::ostringstream> outs(files.size()), errs(files.size());
    std::vector<int> codes(files.size(), kYes);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int threads = std::min<int>(req.options.jobs, static_cast<int>(files.size()));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < files.size(); i = next++)
                codes[i] = recognize_one(files[i], k, single, outs[i], errs[i]);
        });
    for (auto& th : pool) th.join();
    int worst = kYes;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (i) out << "\n";
        out << outs[i].str();
        err << errs[i].str();
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

int cmd_min_k(const std::string& file, std::int64_t k_max, const SolveRequest& req,
              std::ostream& out, std::ostream& err) {
    if (k_max < 0) throw InputError("--k-max must be nonnegative");
    auto f = read_instance_file(file);
    WeightMode mode = effective_mode(req, f);
    SolveStats stats;
    out << "file: " << file << "\nproblem: " << req.problem << "\ndigest: " << instance_digest(f)
        << "\n";
    for (std::int64_t k = 0; k <= k_max; ++k) {
        auto cert = solve(f, req.problem, k, mode, req.options, stats);
        if (!cert) continue;
        std::string path = req.cert_path ? *req.cert_path : default_cert_path(file, req.problem);
        out << "min_k: " << k << "\ncertificate: " << path << "\n";
        out << "entries_created: " << stats.entries_created << "\n";
        return emit_certificate(*cert, f, path, req.verify, out, err);
    }
    out << "min_k: ABOVE_CAP\n";
    out << "entries_created: " << stats.entries_created << "\n";
    return kNo;
}

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw InputError("bad integer list: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

struct ReduceArgs {
    std::string kind;
    std::string a;
    std::string tree;
    int b = -1;
    std::string out;
};

Graph read_tree(const std::string& path) {
    if (path.empty()) throw InputError("--tree is required");
    auto f = read_instance_file(path);
    if (!is_tree(f.graph)) throw InputError(path + " is not a tree");
    return f.graph;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    std::string prefix = a.out.empty() ? a.kind : a.out;
    json manifest;
    manifest["kind"] = a.kind;
    InstanceFile inst;
    std::string ext = ".graph";
    std::int64_t k = 0;
    std::string target;
    if (a.kind == "partition") {
        auto values = parse_list(a.a);
        auto gadget = build_partition_gadget(values);
        bool odd = !partition_to_weighted_one_sided(values);
        inst = from_bipartite(gadget.instance);
        ext = ".bip";
        k = gadget.k;
        target = "one-sided";
        manifest["parameters"] = {{"a", values}};
        manifest["weight_mode"] = "sum";
        manifest["trivially_no"] = odd;
        manifest["guarantee"] =
            "for even Sum(A): A has a balanced partition iff the instance is weighted 1-sided "
            "k-planar under the sum budget";
        manifest["witness_mapping"] =
            "x_0..x_{n+1} = ids 0..n+1 in order, y_mid = n+2, y_i = n+2+i; a_i goes to the side "
            "of y_mid that y_i is placed on";
        if (odd) out << "note: Sum(A) is odd, so Partition is NO; the raw gadget is still written\n";
    } else if (a.kind == "bandwidth-2layer") {
        auto t = read_tree(a.tree);
        auto gadget = bandwidth_tree_to_two_sided(t, a.b);
        inst = from_bipartite(gadget.instance);
        ext = ".bip";
        k = gadget.k;
        target = "two-sided";
        manifest["parameters"] = {{"b", a.b}, {"pendants_per_vertex", gadget.pendants}};
        manifest["guarantee"] = "bw(T) <= b iff the instance is 2-layer k-planar";
        manifest["witness_mapping"] =
            "tree vertices keep ids 0..n-1 (X side), subdivision vertex of tree edge e is n+e, "
            "pendant j of vertex v is n+m+v*l+j";
    } else if (a.kind == "apex") {
        auto t = read_tree(a.tree);
        inst = from_graph(tree_to_apex(t));
        target = "outer";
        k = -1;
        manifest["parameters"] = json::object();
        manifest["guarantee"] =
            "outer k-planar implies bw(T) <= k+1; bw(T) <= b implies outer (5b-5)-planar";
        manifest["witness_mapping"] = "tree vertices keep their ids, the apex is vertex n";
    } else if (a.kind == "bandwidth-outer") {
        auto t = read_tree(a.tree);
        auto gadget = bandwidth_tree_to_outer(t, a.b);
        inst = from_graph(gadget.graph);
        k = gadget.k;
        target = "outer";
        manifest["parameters"] = {{"b", a.b}, {"t", gadget.t}, {"l", gadget.l}};
        manifest["gadget_size"] = gadget.gadget_size;
        manifest["guarantee"] = "bw(T) <= b iff the instance is outer k-planar";
        manifest["witness_mapping"] =
            "clique path of tree vertex v occupies ids v*s..v*s+s-1 (s = gadget_size), the apex "
            "is n*s";
    } else {
        throw InputError("unknown reduction kind " + a.kind);
    }
    if (k >= 0) manifest["k"] = k;
    manifest["target_problem"] = target;
    manifest["vertices"] = inst.graph.vertex_count();
    manifest["edges"] = inst.graph.edge_count();
    manifest["instance_file"] = prefix + ext;
    manifest["digest"] = instance_digest(inst);
    write_text_file(prefix + ext, to_text(inst));
    write_text_file(prefix + ".manifest.json", manifest.dump(2) + "\n");
    out << "instance: " << prefix + ext << "\n";
    out << "manifest: " << prefix + ".manifest.json\n";
    out << "vertices: " << inst.graph.vertex_count() << "\n";
    out << "edges: " << inst.graph.edge_count() << "\n";
    if (k >= 0) out << "k: " << k << "\n";
    out << "guarantee: " << manifest["guarantee"].get<std::string>() << "\n";
    if (target != "one-sided" && k > kPracticalK)
        err << "warning: k=" << k << " exceeds solver caps; the instance is for export only\n";
    return kYes;
}

struct CertArgs {
    std::string cert;
    std::string instance;
    std::string format = "svg";
    std::string out;
};

// Loads a certificate and its instance, rejecting stale or invalid pairs.
int load_checked(const CertArgs& a, Certificate& cert, InstanceFile& inst, std::ostream& err) {
    cert = parse_certificate_json(read_file(a.cert));
    inst = read_instance_file(a.instance);
    if (cert.instance_hash != instance_digest(inst)) {
        err << "error: stale certificate: hash " << cert.instance_hash << " does not match "
            << instance_digest(inst) << "\n";
        return kInputError;
    }
    if (auto why = certificate_problem(cert, inst); !why.empty()) {
        err << "error: certificate does not verify: " << why << "\n";
        return kMismatch;
    }
    return kYes;
}

int cmd_draw(const CertArgs& a, std::ostream& out, std::ostream& err) {
    Certificate cert;
    InstanceFile inst;
    if (int c = load_checked(a, cert, inst, err); c != kYes) return c;
    std::string body;
    if (a.format == "svg") body = render_svg(cert, inst);
    else if (a.format == "dot") body = render_dot(cert, inst);
    else if (a.format == "json") body = certificate_to_json(cert);
    else throw InputError("unknown format " + a.format);
    if (a.out.empty()) out << body;
    else write_text_file(a.out, body);
    return kYes;
}

int cmd_verify(const CertArgs& a, std::ostream& out, std::ostream& err) {
    Certificate cert;
    InstanceFile inst;
    if (int c = load_checked(a, cert, inst, err); c != kYes) return c;
    out << "verify: ok (" << cert.problem << ", k=" << cert.k << ")\n";
    return kYes;
}

struct GenArgs {
    std::string kind;
    int n = -1;
    int nx = -1;
    int ny = -1;
    double p = 0.5;
    int extra = 0;
    int spine = -1;
    int legs = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int require(int v, const char* flag) {
    if (v < 0) throw InputError(std::string(flag) + " is required");
    return v;
}

InstanceFile caterpillar_instance(int spine, int legs) {
    Graph g = caterpillar(spine, legs);
    // X = the even spine positions with the legs of odd ones, ordered along the spine.
    std::vector<Vertex> xs;
    int next = spine;
    for (int i = 0; i < spine; ++i) {
        if (i % 2 == 0) xs.push_back(i);
        for (int l = 0; l < legs; ++l, ++next)
            if (i % 2 == 1) xs.push_back(next);
    }
    InstanceFile f;
    f.graph = g;
    f.x_side = xs;
    std::sort(f.x_side->begin(), f.x_side->end());
    f.x_order = xs;
    return f;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    std::mt19937_64 rng(a.seed);
    InstanceFile f;
    if (a.kind == "random-bipartite") {
        if (a.p < 0 || a.p > 1) throw InputError("--p must lie in [0,1]");
        f = from_bipartite(random_bipartite(require(a.nx, "--nx"), require(a.ny, "--ny"), a.p, rng));
        f.x_order = f.x_side;
    } else if (a.kind == "random-tree") {
        f = from_graph(random_tree(require(a.n, "--n"), rng));
    } else if (a.kind == "random-connected") {
        if (a.extra < 0) throw InputError("--extra must be nonnegative");
        f = from_graph(random_connected(require(a.n, "--n"), a.extra, rng));
    } else if (a.kind == "caterpillar") {
        f = caterpillar_instance(require(a.spine, "--spine"), a.legs);
    } else if (a.kind == "cycle") {
        f = from_graph(cycle_graph(require(a.n, "--n")));
    } else if (a.kind == "complete") {
        f = from_graph(complete_graph(require(a.n, "--n")));
    } else if (a.kind == "complete-bipartite") {
        f = from_bipartite(complete_bipartite(require(a.nx, "--nx"), require(a.ny, "--ny")));
        f.x_order = f.x_side;
    } else {
        throw InputError("unknown generator " + a.kind);
    }
    if (a.out.empty()) out << to_text(f);
    else write_text_file(a.out, to_text(f));
    return kYes;
}

void add_solver_flags(CLI::App* app, SolveRequest& req, std::optional<std::int64_t>& cap,
                      std::string& window) {
    app->add_option("--problem", req.problem, "one-sided, two-sided or outer")
        ->required()
        ->check(CLI::IsMember({"one-sided", "two-sided", "outer"}));
    app->add_option("--mode", req.mode_name, "count, sum or product (one-sided only)")
        ->check(CLI::IsMember({"count", "sum", "product"}));
    app->add_option("--jobs", req.options.jobs, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--table-cap", cap, "DP table cap (overrides LOCALCROSS_TABLE_CAP)")
        ->check(CLI::PositiveNumber);
    app->add_option("--window", window, "fixed or dynamic (one-sided DP closure rule)")
        ->check(CLI::IsMember({"fixed", "dynamic"}));
    app->add_flag("--oracle", req.oracle, "cross-check with the exhaustive solver when within caps");
    app->add_flag("--verify", req.verify, "re-read and re-check the written certificate");
    app->add_flag("--timing", req.timing, "print wall time");
    app->add_option("--cert", req.cert_path, "certificate output path");
}

void finish_solver_flags(SolveRequest& req, const std::optional<std::int64_t>& cap,
                         const std::string& window) {
    req.options.table_cap = cap ? *cap : table_cap_from_env(SolverOptions{}.table_cap);
    req.options.window = window == "fixed" ? WindowPolicy::Fixed : WindowPolicy::Dynamic;
}

}  // namespace

std::int64_t table_cap_from_env(std::int64_t fallback) {
    const char* v = std::getenv("LOCALCROSS_TABLE_CAP");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long long cap = std::strtoll(v, &end, 10);
    if (*end != '\0' || cap <= 0) throw InputError("LOCALCROSS_TABLE_CAP must be a positive integer");
    return cap;
}

std::string certificate_problem(const Certificate& cert, const InstanceFile& inst) {
    try {
        if (cert.problem == "one-sided" || cert.problem == "two-sided") {
            if (!cert.two_layer) return "missing two-layer orders";
            auto bip = cert.problem == "one-sided" ? one_sided_instance(inst)
                                                   : to_bipartite(inst).without_x_order();
            validate_drawing(bip, *cert.two_layer);
            if (cert.problem == "one-sided" && cert.two_layer->x_order != *bip.fixed_x_order())
                return "x order differs from the fixed order";
            if (cert.problem == "two-sided" && cert.mode != WeightMode::Count)
                return "two-sided certificates are unweighted";
            if (!is_two_layer_k_planar(bip, *cert.two_layer, cert.k, cert.mode))
                return "some edge exceeds the budget";
            return {};
        }
        if (cert.problem == "outer") {
            if (!cert.circular) return "missing cycle";
            if (cert.mode != WeightMode::Count) return "outer certificates are unweighted";
            validate_drawing(inst.graph, *cert.circular);
            if (cert.k < 0 || cert.k > INT_MAX) return "k out of range";
            if (!is_outer_k_planar(inst.graph, *cert.circular, static_cast<int>(cert.k)))
                return "some edge exceeds the budget";
            return {};
        }
        return "unknown problem " + cert.problem;
    } catch (const InputError& e) {
        return e.what();
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"localcross: recognition of 2-layer and outer k-planar graphs"};
    app.require_subcommand(1);

    SolveRequest rec_req;
    std::vector<std::string> rec_files;
    std::int64_t rec_k = 0;
    std::optional<std::int64_t> rec_cap;
    std::string rec_window = "dynamic";
    auto* rec = app.add_subcommand("recognize", "decide k-planarity and write a certificate");
    rec->add_option("files", rec_files, "instance files")->required();
    rec->add_option("--k", rec_k, "crossing budget per edge")->required();
    add_solver_flags(rec, rec_req, rec_cap, rec_window);

    SolveRequest min_req;
    std::string min_file;
    std::int64_t k_max = 0;
    std::optional<std::int64_t> min_cap;
    std::string min_window = "dynamic";
    auto* mink = app.add_subcommand("min-k", "smallest feasible k up to --k-max");
    mink->add_option("file", min_file, "instance file")->required();
    mink->add_option("--k-max", k_max, "largest k to try")->required();
    add_solver_flags(mink, min_req, min_cap, min_window);

    ReduceArgs red;
    auto* reduce = app.add_subcommand("reduce", "write a reduction instance and manifest");
    reduce->add_option("kind", red.kind, "partition, bandwidth-2layer, apex or bandwidth-outer")
        ->required()
        ->check(CLI::IsMember({"partition", "bandwidth-2layer", "apex", "bandwidth-outer"}));
    reduce->add_option("--a", red.a, "comma-separated multiset (partition)");
    reduce->add_option("--tree", red.tree, "tree instance file");
    reduce->add_option("--b", red.b, "bandwidth bound");
    reduce->add_option("--out", red.out, "output prefix (default: the kind)");

    CertArgs draw_args;
    auto* draw = app.add_subcommand("draw", "render a certificate");
    draw->add_option("certificate", draw_args.cert, "certificate JSON")->required();
    draw->add_option("--instance", draw_args.instance, "instance file")->required();
    draw->add_option("--format", draw_args.format, "svg, dot or json")
        ->check(CLI::IsMember({"svg", "dot", "json"}));
    draw->add_option("--out", draw_args.out, "output path (default: stdout)");

    CertArgs ver_args;
    auto* verify = app.add_subcommand("verify", "re-check a certificate against its instance");
    verify->add_option("certificate", ver_args.cert, "certificate JSON")->required();
    verify->add_option("--instance", ver_args.instance, "instance file")->required();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", gen_args.kind,
                    "random-bipartite, random-tree, random-connected, caterpillar, cycle, "
                    "complete or complete-bipartite")
        ->required();
    gen->add_option("--n", gen_args.n, "vertices");
    gen->add_option("--nx", gen_args.nx, "X side size");
    gen->add_option("--ny", gen_args.ny, "Y side size");
    gen->add_option("--p", gen_args.p, "edge probability");
    gen->add_option("--extra", gen_args.extra, "extra edges beyond a spanning tree");
    gen->add_option("--spine", gen_args.spine, "caterpillar spine length");
    gen->add_option("--legs", gen_args.legs, "leaves per spine vertex");
    gen->add_option("--seed", gen_args.seed, "RNG seed");
    gen->add_option("--out", gen_args.out, "output path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*rec) {
            finish_solver_flags(rec_req, rec_cap, rec_window);
            return cmd_recognize(rec_files, rec_k, rec_req, out, err);
        }
        if (*mink) {
            finish_solver_flags(min_req, min_cap, min_window);
            return cmd_min_k(min_file, k_max, min_req, out, err);
        }
        if (*reduce) return cmd_reduce(red, out, err);
        if (*draw) return cmd_draw(draw_args, out, err);
        if (*verify) return cmd_verify(ver_args, out, err);
        if (*gen) return cmd_gen(gen_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
    return kInputError;
}

}  // namespace localcross::cli
