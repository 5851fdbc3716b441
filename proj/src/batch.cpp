#include "ore5/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ore5/errors.hpp"

namespace ore5 {

namespace {

using nlohmann::json;

GuestProfile guest_from_json(const json& j, int n) {
    GuestProfile p;
    p.n = n;
    if (j.contains("weights")) {
        const json& w = j["weights"];
        p.w_edge = w.value("edge", 1.0);
        p.w_p2 = w.value("p2", 1.0);
        p.w_path = w.value("path", 1.0);
        p.w_cycle = w.value("cycle", 1.0);
        p.w_triangle = w.value("triangle", 1.0);
        p.w_claw = w.value("claw", 1.0);
        p.w_star4 = w.value("star4", 1.0);
    }
    p.triangle_target = j.value("triangle_target", -1.0);
    p.pendant_on_triangle = j.value("pendant", false);
    p.allow_isolated = j.value("allow_isolated", true);
    return p;
}

HostProfile host_from_json(const json& j, int n) {
    HostProfile p;
    p.n = n;
    std::string shape = j.value("shape", std::string("random-min-degree"));
    auto s = host_shape_from_name(shape);
    if (!s) throw std::invalid_argument("unknown host shape: " + shape);
    p.shape = *s;
    p.min_degree = j.value("min_degree", -1);
    p.noise = j.value("noise", 0.1);
    p.planted_severe = j.value("planted", 0);
    p.repair_to_conforming = j.value("repair", false);
    return p;
}

int shape_rounded_order(int n, HostShape shape) {
    if (shape == HostShape::TightCH) n -= n % 3;
    if (shape == HostShape::TightBipartite) n -= n % 2;
    return n;
}

} // namespace

Corpus corpus_from_json_text(const std::string& text) {
    json doc = json::parse(text);
    Corpus c;
    c.name = doc.value("name", std::string("corpus"));
    int next_id = 0;
    for (const json& grp : doc.value("groups", json::array())) {
        int count = grp.value("count", 1);
        std::uint64_t seed0 = grp.value("seed0", (std::uint64_t)0);
        bool force = grp.value("force", false);
        int lo, hi;
        if (grp.contains("n") && grp["n"].is_array()) {
            lo = grp["n"][0].get<int>();
            hi = grp["n"][1].get<int>();
        } else {
            lo = hi = grp.value("n", 30);
        }
        if (lo > hi || lo < 0) throw std::invalid_argument("bad order range in corpus group");
        json gj = grp.value("guest", json::object());
        json hj = grp.value("host", json::object());
        for (int t = 0; t < count; ++t) {
            std::uint64_t seed = seed0 + (std::uint64_t)t;
            std::mt19937_64 rng(seed ^ 0xc0985e5ull);
            int n = lo + (hi > lo ? (int)(rng() % (std::uint64_t)(hi - lo + 1)) : 0);
            CorpusInstance inst;
            inst.id = next_id++;
            inst.seed = seed;
            inst.force = force;
            inst.host = host_from_json(hj, n);
            inst.host.n = shape_rounded_order(n, inst.host.shape);
            inst.guest = guest_from_json(gj, inst.host.n);
            c.instances.push_back(std::move(inst));
        }
    }
    return c;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return corpus_from_json_text(ss.str());
}

BatchSummary batch_run(const Corpus& corpus, const EngineConfig& cfg, int workers) {
    if (workers <= 0) {
        if (const char* env = std::getenv("ORE5_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = (int)std::thread::hardware_concurrency();
        if (workers <= 0) workers = 1;
    }
    BatchSummary sum;
    sum.results.resize(corpus.instances.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= corpus.instances.size()) return;
            const CorpusInstance& inst = corpus.instances[i];
            InstanceResult& r = sum.results[i];
            r.id = inst.id;
            r.n = inst.host.n;
            r.shape = host_shape_name(inst.host.shape);
            try {
                Graph h = gen_guest(inst.guest, inst.seed);
                Graph g = gen_host(inst.host, inst.seed ^ 0x9e3779b97f4a7c15ull);
                EngineConfig run_cfg = cfg;
                run_cfg.seed = inst.seed;
                run_cfg.force = inst.force || cfg.force;
                EngineResult er = embed(h, g, run_cfg);
                r.route = er.report.route;
                r.used_fallback = er.report.used_fallback;
                r.millis = er.report.millis;
                r.success = er.emb.has_value();
                r.verified = er.report.verified;
                if (!er.report.notes.empty()) r.note = er.report.notes.front();
            } catch (const OreDegreeViolation& e) {
                r.hypothesis_violation = true;
                r.note = e.what();
            } catch (const HypothesisViolation& e) {
                r.hypothesis_violation = true;
                r.note = e.what();
            } catch (const std::exception& e) {
                r.success = false;
                r.verified = false;
                r.route = "error";
                r.note = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(workers, (int)corpus.instances.size());
    for (int t = 0; t < std::max(1, nthreads); ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::vector<double> times;
    for (const InstanceResult& r : sum.results) {
        ++sum.total;
        if (r.success) ++sum.embedded;
        if (r.verified) ++sum.verified;
        if (r.used_fallback) ++sum.fallbacks;
        if (r.hypothesis_violation) ++sum.violations;
        if (!r.hypothesis_violation && (!r.success || !r.verified)) ++sum.soundness_failures;
        sum.total_millis += r.millis;
        times.push_back(r.millis);
    }
    if (!times.empty()) {
        std::sort(times.begin(), times.end());
        sum.median_millis = times[times.size() / 2];
    }
    return sum;
}

std::string summary_table(const BatchSummary& s) {
    std::ostringstream out;
    out << "instances: " << s.total << "  embedded: " << s.embedded << "  verified: " << s.verified
        << "  fallbacks: " << s.fallbacks << "  violations: " << s.violations
        << "  soundness failures: " << s.soundness_failures << "\n";
    out << "time: total " << (long long)s.total_millis << " ms, median "
        << (long long)s.median_millis << " ms\n";
    std::map<std::string, int> routes;
    for (const InstanceResult& r : s.results) ++routes[r.route.empty() ? "-" : r.route];
    out << "routes:";
    for (const auto& [name, cnt] : routes) out << "  " << name << "=" << cnt;
    out << "\n";
    return out.str();
}

std::string summary_lines(const BatchSummary& s) {
    std::ostringstream out;
    for (const InstanceResult& r : s.results) {
        out << "id=" << r.id << " n=" << r.n << " shape=" << r.shape << " route="
            << (r.route.empty() ? "-" : r.route) << " fallback=" << (r.used_fallback ? 1 : 0)
            << " success=" << (r.success ? 1 : 0) << " verified=" << (r.verified ? 1 : 0)
            << " violation=" << (r.hypothesis_violation ? 1 : 0) << " ms=" << r.millis;
        if (!r.note.empty()) {
            std::string note = r.note;
            for (char& ch : note)
                if (ch == '\n') ch = ' ';
            out << " note=\"" << note << "\"";
        }
        out << "\n";
    }
    return out.str();
}

int summary_exit_code(const BatchSummary& s) {
    if (s.soundness_failures > 0) return 1;
    if (s.violations > 0) return 2;
    return 0;
}

} // namespace ore5
