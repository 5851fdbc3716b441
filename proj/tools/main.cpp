#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ore5/batch.hpp"
#include "ore5/coloring.hpp"
#include "ore5/engine.hpp"
#include "ore5/errors.hpp"
#include "ore5/extremal.hpp"
#include "ore5/factor.hpp"
#include "ore5/generators.hpp"
#include "ore5/graph.hpp"
#include "ore5/hstructure.hpp"
#include "ore5/io.hpp"
#include "ore5/matching.hpp"
#include "ore5/pipeline.hpp"

namespace {

using namespace ore5;

void emit_graph(const Graph& g, const std::string& out) {
    if (out.empty())
        write_edge_list(g, std::cout);
    else
        write_edge_list_file(g, out);
}

void print_set(const char* label, const std::vector<int>& s) {
    std::cout << label << " (" << s.size() << "):";
    for (int v : s) std::cout << ' ' << v;
    std::cout << "\n";
}

Embedding read_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open embedding file: " + path);
    int n;
    if (!(in >> n) || n < 0) throw std::runtime_error("embedding file must start with the order");
    Embedding e(n);
    for (int i = 0; i < n; ++i)
        if (!(in >> e.phi[i]))
            throw std::runtime_error("embedding file ended before " + std::to_string(n) +
                                     " images");
    return e;
}

void write_embedding(const Embedding& e, const std::string& path) {
    std::ostream* out = &std::cout;
    std::ofstream f;
    if (!path.empty()) {
        f.open(path);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        out = &f;
    }
    *out << e.phi.size() << "\n";
    for (size_t i = 0; i < e.phi.size(); ++i) *out << e.phi[i] << (i + 1 < e.phi.size() ? ' ' : '\n');
}

int cmd_analyze(const std::string& file) {
    Graph g = read_edge_list_file(file);
    std::cout << "vertices: " << g.n << "\nedges: " << g.edge_count() << "\n";
    if (g.n == 0) return 0;
    std::cout << "min degree: " << min_degree(g) << "\nmax degree: " << max_degree(g) << "\n";
    std::cout << "edge degree sum (max over edges): " << ore_degree(g) << "\n";
    auto d2 = delta2(g);
    std::cout << "nonadjacent degree sum (min): " << (d2 ? std::to_string(*d2) : "-") << "\n";
    std::cout << "host-conforming (delta >= ceil(2n/3)): "
              << (3LL * min_degree(g) >= 2LL * g.n ? "yes" : "no") << "\n";
    auto comps = classify_components(g);
    std::cout << "components: " << comps.size() << "\n";
    for (const auto& c : comps)
        std::cout << "  " << component_kind_name(c.kind) << " on " << c.vertices.size()
                  << " vertices\n";
    if (ore_degree(g) <= 5) {
        TriangleExtremality tex = triangle_extremality(g, 0.1);
        std::cout << "disjoint triangles: " << tex.triangle_count
                  << " (triangle-cover extreme at nu=0.1: " << (tex.is_extreme ? "yes" : "no")
                  << ")\n";
    }
    return 0;
}

int cmd_decompose(const std::string& file) {
    Graph h = read_edge_list_file(file);
    HDecomposition dec = decompose(h);
    print_set("independent dominating set", dec.I);
    print_set("seed subset", dec.Iprime);
    print_set("same-component class", dec.I1);
    print_set("split-component class", dec.I2);
    std::cout << "leftover path components (" << dec.rest_components.size() << "):\n";
    for (const auto& c : dec.rest_components) {
        std::cout << " ";
        for (int v : c) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_factor(const std::string& file) {
    Graph g = read_edge_list_file(file);
    auto ts = triangle_factor(g);
    if (!ts) {
        std::cout << "absent\n";
        return 1;
    }
    std::cout << ts->triangles.size() << " triangles\n";
    for (const auto& t : ts->triangles) std::cout << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
    return 0;
}

int cmd_hamilton(const std::string& file) {
    Graph g = read_edge_list_file(file);
    auto hc = hamilton_cycle(g);
    if (!hc) {
        std::cout << "absent\n";
        return 1;
    }
    for (size_t i = 0; i < hc->size(); ++i) std::cout << (*hc)[i] << (i + 1 < hc->size() ? ' ' : '\n');
    return 0;
}

int cmd_layout(const std::string& file) {
    Graph h = read_edge_list_file(file);
    std::vector<int> ord = layout_into_path_square(h);
    for (size_t i = 0; i < ord.size(); ++i) std::cout << ord[i] << (i + 1 < ord.size() ? ' ' : '\n');
    return 0;
}

int cmd_extremal(const std::string& file, int k, double eta) {
    Graph g = read_edge_list_file(file);
    auto cert = extremality_certificate(g, k, eta);
    if (!cert) {
        std::cout << "non-extremal at k=" << k << " eta=" << eta << "\n";
        return 0;
    }
    std::cout << "sparse block of size " << cert->a.size() << " with " << cert->internal_edges
              << " internal edges\n";
    print_set("block", cert->a);
    return 0;
}

int cmd_propmatch(const std::string& file, double mu, std::uint64_t seed) {
    Graph gr = read_edge_list_file(file);
    auto m1 = pair_cover_matching(gr);
    if (std::holds_alternative<ProportionalMatching>(m1)) {
        const auto& pm = std::get<ProportionalMatching>(m1);
        std::cout << "pair cover: proportional matching with q=" << pm.q << "\n";
    } else {
        print_set("pair cover: Hall violator", std::get<HallWitness>(m1));
        return 1;
    }
    auto m2 = strong_proportional_matching(gr, mu, seed);
    if (std::holds_alternative<StrongMatchingResult>(m2)) {
        const auto& sm = std::get<StrongMatchingResult>(m2);
        std::cout << "pair copies: strong proportional matching with q=" << sm.matching.q
                  << " (copies=" << sm.copies_graph.copies << ")\n";
        return 0;
    }
    print_set("pair copies: Hall violator", std::get<HallWitness>(m2));
    return 1;
}

int cmd_pipeline(int ell, int m, double d, double eps, double delta, double c, int v0,
                 double edge_keep, std::uint64_t seed) {
    ClusterWorld world = make_cluster_world(ell, m, d, eps, delta, c, v0, edge_keep, seed);
    GuestProfile gp;
    gp.n = (int)world.n();
    Graph h = gen_guest(gp, seed ^ 0x477e57ull);
    PipelineResult pr = pipeline_run(h, world, seed);
    std::vector<int> sizes = pr.state.l_sizes(world.ell());
    std::cout << "cluster sizes:";
    for (int i = 0; i <= world.ell(); ++i) std::cout << ' ' << sizes[i];
    std::cout << "\nswitches: " << pr.switches.size() << "\n";
    for (int i = 1; i <= 9; ++i) {
        std::cout << "C" << i << ": ";
        if (!pr.report.checked[i])
            std::cout << "unchecked";
        else
            std::cout << (pr.report.ok[i] ? "ok" : "FAIL");
        std::cout << "\n";
    }
    for (const auto& note : pr.report.notes) std::cout << "note: " << note << "\n";
    return pr.report.all_ok() ? 0 : 1;
}

int cmd_embed(const std::string& guest, const std::string& host, const EngineConfig& cfg,
              const std::string& out) {
    Graph h = read_edge_list_file(guest);
    Graph g = read_edge_list_file(host);
    EngineResult r = embed(h, g, cfg);
    std::cout << "route: " << r.report.route << (r.report.used_fallback ? " (fallback)" : "")
              << "\n";
    for (const auto& note : r.report.notes) std::cout << "note: " << note << "\n";
    if (!r.emb) {
        std::cout << "absent\n";
        return 1;
    }
    std::cout << "verified: " << (r.report.verified ? "yes" : "no") << "\n";
    write_embedding(*r.emb, out);
    return 0;
}

int cmd_verify(const std::string& guest, const std::string& host, const std::string& map_file) {
    Graph h = read_edge_list_file(guest);
    Graph g = read_edge_list_file(host);
    Embedding e = read_embedding_file(map_file);
    VerifyReport vr = verify_embedding(h, g, e);
    if (vr.ok) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "violation: " << vr.first_violation << "\n";
    return 1;
}

int cmd_oracle(const std::string& guest, const std::string& host, const std::string& out) {
    Graph h = read_edge_list_file(guest);
    Graph g = read_edge_list_file(host);
    auto e = oracle_embed(h, g);
    if (!e) {
        std::cout << "absent\n";
        return 1;
    }
    write_embedding(*e, out);
    return 0;
}

int cmd_bench(const std::string& corpus_file, int workers, bool lines, bool force) {
    Corpus corpus = load_corpus_file(corpus_file);
    EngineConfig cfg;
    cfg.force = force;
    BatchSummary s = batch_run(corpus, cfg, workers);
    if (lines) std::cout << summary_lines(s);
    std::cout << summary_table(s);
    return summary_exit_code(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedding toolkit for low-edge-degree guests in dense hosts"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a guest or host graph");
    gen->require_subcommand(1);
    GuestProfile gp;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* geng = gen->add_subcommand("guest", "generate a guest");
    geng->add_option("--n", gp.n, "vertex count")->required();
    geng->add_option("--seed", gen_seed, "seed");
    geng->add_option("--w-edge", gp.w_edge, "single-edge weight");
    geng->add_option("--w-p2", gp.w_p2, "two-edge-path weight");
    geng->add_option("--w-path", gp.w_path, "longer-path weight");
    geng->add_option("--w-cycle", gp.w_cycle, "cycle weight");
    geng->add_option("--w-triangle", gp.w_triangle, "triangle weight");
    geng->add_option("--w-claw", gp.w_claw, "claw weight");
    geng->add_option("--w-star4", gp.w_star4, "four-leaf-star weight");
    geng->add_option("--triangle-target", gp.triangle_target,
                     "fraction of floor(n/3) laid as triangles first");
    geng->add_flag("--pendant", gp.pendant_on_triangle,
                   "attach a pendant to the first triangle (edge degree sum 5)");
    geng->add_option("-o,--out", gen_out, "output file (default stdout)");

    HostProfile hp;
    std::string host_shape = "random-min-degree";
    auto* genh = gen->add_subcommand("host", "generate a host");
    genh->add_option("--n", hp.n, "vertex count")->required();
    genh->add_option("--seed", gen_seed, "seed");
    genh->add_option("--shape", host_shape,
                     "random-min-degree | tripartite-extremal | two-clique | three-block | "
                     "tight-ch | tight-bipartite");
    genh->add_option("--min-degree", hp.min_degree, "degree target (-1 = ceil(2n/3))");
    genh->add_option("--noise", hp.noise, "extra-edge density");
    genh->add_option("--planted", hp.planted_severe, "starved vertices to plant (case shapes)");
    genh->add_flag("--repair", hp.repair_to_conforming, "repair up to delta >= ceil(2n/3)");
    genh->add_option("-o,--out", gen_out, "output file (default stdout)");

    // single-file commands
    std::string file;
    auto* analyze = app.add_subcommand("analyze", "degree/shape summary of a graph");
    analyze->add_option("file", file, "edge-list file")->required();
    auto* dec = app.add_subcommand("decompose", "independent-set decomposition of a guest");
    dec->add_option("file", file, "edge-list file")->required();
    auto* factor = app.add_subcommand("factor", "disjoint triangle family of floor(n/3) triangles");
    factor->add_option("file", file, "edge-list file")->required();
    auto* ham = app.add_subcommand("hamilton", "Hamilton cycle");
    ham->add_option("file", file, "edge-list file")->required();
    auto* layout = app.add_subcommand("layout", "order with every edge within two positions");
    layout->add_option("file", file, "edge-list file")->required();

    int ex_k = 3;
    double ex_eta = 0.15;
    auto* extremal = app.add_subcommand("extremal", "sparse-block certificate");
    extremal->add_option("file", file, "edge-list file")->required();
    extremal->add_option("--k", ex_k, "block count (sparse set has floor(n/k) vertices)");
    extremal->add_option("--eta", ex_eta, "sparsity threshold");

    double pm_mu = 0.3;
    std::uint64_t pm_seed = 1;
    auto* propmatch = app.add_subcommand("propmatch", "proportional matchings of a reduced graph");
    propmatch->add_option("file", file, "reduced-graph edge-list file")->required();
    propmatch->add_option("--mu", pm_mu, "copy-expansion parameter");
    propmatch->add_option("--seed", pm_seed, "seed");

    int pl_ell = 9, pl_m = 30, pl_v0 = 0;
    double pl_d = 0.02, pl_eps = 0.01, pl_delta = 0.0, pl_c = 0.3, pl_keep = 1.0;
    std::uint64_t pl_seed = 1;
    auto* pipeline = app.add_subcommand("pipeline", "cluster assignment pipeline on a synthetic world");
    pipeline->add_option("--ell", pl_ell, "cluster count");
    pipeline->add_option("--m", pl_m, "cluster size");
    pipeline->add_option("--d", pl_d, "density parameter");
    pipeline->add_option("--eps", pl_eps, "regularity parameter");
    pipeline->add_option("--delta", pl_delta, "buffer fraction (0 disables buffers)");
    pipeline->add_option("--c", pl_c, "switching degree fraction");
    pipeline->add_option("--v0", pl_v0, "exceptional class size");
    pipeline->add_option("--edge-keep", pl_keep, "kept fraction of reduced-graph edges");
    pipeline->add_option("--seed", pl_seed, "seed");

    std::string guest_file, host_file, map_file, emb_out;
    EngineConfig ecfg;
    auto* embed_cmd = app.add_subcommand("embed", "embed a guest into a host");
    embed_cmd->add_option("guest", guest_file, "guest edge-list file")->required();
    embed_cmd->add_option("host", host_file, "host edge-list file")->required();
    embed_cmd->add_option("--eta", ecfg.eta, "host sparse-block threshold");
    embed_cmd->add_option("--mu", ecfg.mu, "two-clique/three-block threshold");
    embed_cmd->add_option("--nu", ecfg.nu, "guest triangle-cover threshold");
    embed_cmd->add_option("--alpha", ecfg.alpha, "matching dichotomy slack");
    embed_cmd->add_option("--seed", ecfg.seed, "seed");
    embed_cmd->add_option("--budget", ecfg.node_budget, "search node budget");
    embed_cmd->add_flag("--force", ecfg.force, "skip hypothesis checks");
    embed_cmd->add_option("-o,--out", emb_out, "embedding output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check an embedding file");
    verify->add_option("guest", guest_file, "guest edge-list file")->required();
    verify->add_option("host", host_file, "host edge-list file")->required();
    verify->add_option("map", map_file, "embedding file (n, then n images)")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive embedding search");
    oracle->add_option("guest", guest_file, "guest edge-list file")->required();
    oracle->add_option("host", host_file, "host edge-list file")->required();
    oracle->add_option("-o,--out", emb_out, "embedding output file (default stdout)");

    std::string corpus_file;
    int workers = 0;
    bool bench_lines = false, bench_force = false;
    auto* bench = app.add_subcommand("bench", "run a corpus file");
    bench->add_option("corpus", corpus_file, "corpus JSON file")->required();
    bench->add_option("--workers", workers, "worker threads (0 = ORE5_WORKERS or hardware)");
    bench->add_flag("--lines", bench_lines, "also print one line per instance");
    bench->add_flag("--force", bench_force, "run every instance with checks disabled");

    CLI11_PARSE(app, argc, argv);

    try {
        if (geng->parsed()) {
            Graph g = gen_guest(gp, gen_seed);
            emit_graph(g, gen_out);
            return 0;
        }
        if (genh->parsed()) {
            auto s = host_shape_from_name(host_shape);
            if (!s) throw std::invalid_argument("unknown host shape: " + host_shape);
            hp.shape = *s;
            Graph g = gen_host(hp, gen_seed);
            emit_graph(g, gen_out);
            return 0;
        }
        if (analyze->parsed()) return cmd_analyze(file);
        if (dec->parsed()) return cmd_decompose(file);
        if (factor->parsed()) return cmd_factor(file);
        if (ham->parsed()) return cmd_hamilton(file);
        if (layout->parsed()) return cmd_layout(file);
        if (extremal->parsed()) return cmd_extremal(file, ex_k, ex_eta);
        if (propmatch->parsed()) return cmd_propmatch(file, pm_mu, pm_seed);
        if (pipeline->parsed())
            return cmd_pipeline(pl_ell, pl_m, pl_d, pl_eps, pl_delta, pl_c, pl_v0, pl_keep,
                                pl_seed);
        if (embed_cmd->parsed()) return cmd_embed(guest_file, host_file, ecfg, emb_out);
        if (verify->parsed()) return cmd_verify(guest_file, host_file, map_file);
        if (oracle->parsed()) return cmd_oracle(guest_file, host_file, emb_out);
        if (bench->parsed()) return cmd_bench(corpus_file, workers, bench_lines, bench_force);
    } catch (const OreDegreeViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
