// psk: planar support kit. Hypergraph supports on r-outerplanar graphs:
// twin-capping kernelization, well-formed separator sequences, gluing,
// separator signatures, and an exact small-instance oracle.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "psk/gen.hpp"
#include "psk/io_json.hpp"
#include "psk/kernel.hpp"
#include "psk/oracle.hpp"
#include "psk/signatures.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw psk::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw psk::Error("cannot write " + path);
    out << content;
}

struct Inputs {
    psk::Json hashes = psk::Json::object();

    std::string read(const std::string& path) {
        std::string text = slurp(path);
        hashes[path] = "fnv1a64:" + psk::fnv1a64_hex(text);
        return text;
    }
};

psk::Json base_json(const Inputs& in) {
    psk::Json j;
    j["version"] = kVersion;
    j["input_hashes"] = in.hashes;
    return j;
}

void emit(const psk::Json& j) { std::cout << j.dump(2) << std::endl; }

std::uint64_t env_seed() {
    if (const char* s = std::getenv("PSK_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

int verdict_exit(psk::Verdict v) {
    switch (v) {
        case psk::Verdict::Yes: return kExitYes;
        case psk::Verdict::No: return kExitNo;
        default: return kExitUnknown;
    }
}

const char* verdict_name(psk::Verdict v) {
    switch (v) {
        case psk::Verdict::Yes: return "yes";
        case psk::Verdict::No: return "no";
        default: return "unknown";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar support kit"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap (all commands run single-threaded)");

    std::string arg_in, arg_g, arg_h, arg_seq, arg_out, arg_map_out;
    int arg_r = -1;
    long long arg_alpha = -1;
    bool flag_paper = false;
    long long arg_block_threshold = -1;
    int arg_i = 0, arg_j = 0;
    psk::SearchBudget budget;
    bool flag_dot = false, flag_layers = false;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-free-edges", budget.max_free_edges, "candidate edge cap");
        cmd->add_option("--max-nodes", budget.max_nodes, "search node cap");
        cmd->add_option("--time-cap", budget.time_cap_s, "wall clock cap in seconds");
    };

    auto* kernelize = app.add_subcommand("kernelize", "twin-capping kernelization");
    kernelize->add_option("input", arg_in)->required();
    kernelize->add_option("--r", arg_r, "outerplanarity parameter")->required();
    kernelize->add_option("--alpha", arg_alpha, "explicit twin-class cap");
    kernelize->add_flag("--paper-bound", flag_paper, "use the double-exponential cap");
    kernelize->add_option("--out", arg_out, "output .hg path");

    auto* solve = app.add_subcommand("solve", "exact support search");
    solve->add_option("input", arg_in)->required();
    solve->add_option("--r", arg_r, "outerplanarity bound (omit: any planar support)");
    solve->add_option("--out", arg_out, "witness .pg path");
    add_budget(solve);

    auto* check = app.add_subcommand("check-support", "verify a support");
    check->add_option("graph", arg_g)->required();
    check->add_option("hypergraph", arg_h)->required();

    auto* sepseq = app.add_subcommand("sepseq", "build a well-formed separator sequence");
    sepseq->add_option("graph", arg_g)->required();
    sepseq->add_option("--block-threshold", arg_block_threshold,
                       "recurse on blocks of at least this size");
    sepseq->add_option("--out", arg_out, "sequence JSON path");

    auto* vseq = app.add_subcommand("validate-sepseq", "validate a separator sequence");
    vseq->add_option("graph", arg_g)->required();
    vseq->add_option("sequence", arg_seq)->required();

    auto* glue = app.add_subcommand("glue", "glue two separators of a sequence");
    glue->add_option("graph", arg_g)->required();
    glue->add_option("sequence", arg_seq)->required();
    glue->add_option("--i", arg_i, "first separator (1-based)")->required();
    glue->add_option("--j", arg_j, "second separator (1-based)")->required();
    glue->add_option("--out", arg_out, "output .pg path");
    glue->add_option("--map-out", arg_map_out, "vertex map JSON path");

    auto* sig = app.add_subcommand("signature", "separator signatures over a support");
    sig->add_option("graph", arg_g)->required();
    sig->add_option("hypergraph", arg_h)->required();
    sig->add_option("sequence", arg_seq)->required();

    auto* render = app.add_subcommand("render", "DOT output");
    render->add_option("graph", arg_g)->required();
    render->add_flag("--dot", flag_dot, "emit DOT (default)");
    render->add_flag("--layers", flag_layers, "annotate layers");

    auto* gen = app.add_subcommand("gen", "emit fixture instances");
    std::string gen_kind;
    int gen_n = 0, gen_layers = 1, gen_size = 12;
    std::uint64_t gen_seed = env_seed();
    gen->add_option("kind", gen_kind,
                    "fig-counter | fig-counter-minus-t | supplement-ell | fan | disk | "
                    "hinged-fan | corridor-hub | corridor-pair | corridor-private")
        ->required();
    gen->add_option("n", gen_n, "size argument (ell, fan n, hinged-fan k, corridor m)");
    gen->add_option("--layers", gen_layers, "disk: layer count");
    gen->add_option("--size", gen_size, "disk: vertex count");
    gen->add_option("--seed", gen_seed, "generator seed (default: PSK_SEED)");
    gen->add_option("--out", arg_out, "output path");

    CLI11_PARSE(app, argc, argv);
    if (threads < 1) {
        std::cerr << "error: --threads must be positive\n";
        return kExitError;
    }

    try {
        Inputs in;
        if (kernelize->parsed()) {
            auto parsed = psk::parse_hg(in.read(arg_in));
            for (const auto& d : parsed.diagnostics) std::cerr << arg_in << ": " << d << "\n";
            psk::KernelConfig cfg;
            cfg.r = arg_r;
            if (arg_alpha >= 0 && flag_paper) throw psk::Error("--alpha conflicts with --paper-bound");
            cfg.paper_bound = arg_alpha < 0;
            if (arg_alpha >= 0) cfg.alpha = arg_alpha;
            auto [kernel, report] = psk::kernelize(parsed.hypergraph, cfg);
            std::string outpath = arg_out.empty() ? arg_in + ".kernel.hg" : arg_out;
            spit(outpath, psk::serialize_hg(kernel));
            psk::Json j = base_json(in);
            j["output"] = outpath;
            j["n_before"] = parsed.hypergraph.n();
            j["n_after"] = kernel.n();
            psk::Json classes = psk::Json::object();
            for (const auto& c : report.classes)
                classes[c.representative] = {{"kept", c.kept},
                                             {"removed", c.removed.size()},
                                             {"removed_names", c.removed}};
            j["classes"] = classes;
            emit(j);
            return kExitYes;
        }
        if (solve->parsed()) {
            auto parsed = psk::parse_hg(in.read(arg_in));
            for (const auto& d : parsed.diagnostics) std::cerr << arg_in << ": " << d << "\n";
            std::optional<int> r;
            if (arg_r >= 0) r = arg_r;
            auto res = psk::find_support(parsed.hypergraph, r, budget);
            psk::Json j = base_json(in);
            j["verdict"] = verdict_name(res.verdict);
            j["nodes"] = res.nodes;
            if (res.verdict == psk::Verdict::Yes) {
                std::string outpath = arg_out.empty() ? arg_in + ".witness.pg" : arg_out;
                spit(outpath, psk::serialize_pg(*res.witness));
                j["witness"] = outpath;
            }
            emit(j);
            return verdict_exit(res.verdict);
        }
        if (check->parsed()) {
            psk::PlaneGraph g = psk::parse_pg(in.read(arg_g));
            auto parsed = psk::parse_hg(in.read(arg_h));
            auto verdict = psk::is_support(g.underlying(), parsed.hypergraph);
            psk::Json j = base_json(in);
            j["ok"] = verdict.ok;
            psk::Json viol = psk::Json::array();
            for (const auto& [e, comps] : verdict.violations) {
                psk::Json parts = psk::Json::array();
                for (const auto& comp : comps) {
                    std::vector<std::string> names;
                    for (int v : comp) names.push_back(g.names[v]);
                    parts.push_back(names);
                }
                std::vector<std::string> edge_names;
                for (int v : parsed.hypergraph.edges[e]) edge_names.push_back(parsed.hypergraph.names[v]);
                viol.push_back({{"hyperedge", edge_names}, {"components", parts}});
            }
            j["violations"] = viol;
            emit(j);
            return verdict.ok ? kExitYes : kExitNo;
        }
        if (sepseq->parsed()) {
            psk::PlaneGraph g = psk::parse_pg(in.read(arg_g));
            std::optional<long long> threshold;
            if (arg_block_threshold >= 0) threshold = arg_block_threshold;
            auto built = psk::build_wfss(g, threshold);
            psk::Json j = base_json(in);
            j["length"] = built.sequence.length();
            j["width"] = built.sequence.width();
            j["used_block_recursion"] = built.used_block_recursion;
            j["sequence"] = psk::seq_to_json(g, built.sequence);
            if (!arg_out.empty()) spit(arg_out, psk::seq_to_json(g, built.sequence).dump(2) + "\n");
            emit(j);
            return kExitYes;
        }
        if (vseq->parsed()) {
            psk::PlaneGraph g = psk::parse_pg(in.read(arg_g));
            auto seq = psk::seq_from_json(g, psk::Json::parse(in.read(arg_seq)));
            auto rep = psk::validate_wfss(g, seq);
            psk::Json j = base_json(in);
            j.update(psk::report_to_json(rep));
            emit(j);
            return rep.ok() ? kExitYes : kExitNo;
        }
        if (glue->parsed()) {
            psk::PlaneGraph g = psk::parse_pg(in.read(arg_g));
            auto seq = psk::seq_from_json(g, psk::Json::parse(in.read(arg_seq)));
            if (arg_i < 1 || arg_j < arg_i || arg_j > seq.length())
                throw psk::Error("glue: need 1 <= i <= j <= sequence length");
            auto res = psk::glue(g, seq, arg_i - 1, arg_j - 1);
            std::string outpath = arg_out.empty() ? arg_g + ".glued.pg" : arg_out;
            spit(outpath, psk::serialize_pg(res.graph));
            psk::Json map = psk::Json::object();
            for (int v = 0; v < g.n(); ++v)
                if (res.new_of_old[v] >= 0)
                    map[g.names[v]] = res.graph.names[res.new_of_old[v]];
            if (!arg_map_out.empty()) spit(arg_map_out, map.dump(2) + "\n");
            psk::Json j = base_json(in);
            j["output"] = outpath;
            j["vertices"] = res.graph.n();
            j["vertex_map"] = map;
            emit(j);
            return kExitYes;
        }
        if (sig->parsed()) {
            psk::PlaneGraph g = psk::parse_pg(in.read(arg_g));
            auto parsed = psk::parse_hg(in.read(arg_h));
            auto seq = psk::seq_from_json(g, psk::Json::parse(in.read(arg_seq)));
            auto sigs = psk::signatures_of(g, parsed.hypergraph, seq);
            psk::Json j = base_json(in);
            psk::Json arr = psk::Json::array();
            for (const auto& s : sigs) arr.push_back(psk::signature_to_json(s));
            j["signatures"] = arr;
            auto pair = psk::find_equal_signature_pair(sigs);
            if (pair)
                j["equal_pair"] = {pair->first, pair->second};
            else
                j["equal_pair"] = nullptr;
            emit(j);
            return kExitYes;
        }
        if (render->parsed()) {
            psk::PlaneGraph g = psk::parse_pg(in.read(arg_g));
            std::cout << psk::render_dot(g, flag_layers);
            return kExitYes;
        }
        if (gen->parsed()) {
            std::string text;
            std::string default_name = gen_kind;
            if (gen_kind == "fig-counter") {
                text = psk::serialize_hg(psk::gen::fig_counter());
                default_name = "fig-counter.hg";
            } else if (gen_kind == "fig-counter-minus-t") {
                text = psk::serialize_hg(psk::gen::fig_counter_minus_t());
                default_name = "fig-counter-minus-t.hg";
            } else if (gen_kind == "supplement-ell") {
                if (gen_n < 1) throw psk::Error("gen supplement-ell: pass ell >= 1");
                text = psk::serialize_hg(psk::gen::supplement_ell(gen_n));
                default_name = "supplement-ell" + std::to_string(gen_n) + ".hg";
            } else if (gen_kind == "fan") {
                if (gen_n < 3) throw psk::Error("gen fan: pass n >= 3");
                text = psk::serialize_pg(psk::gen::fan(gen_n));
                default_name = "fan" + std::to_string(gen_n) + ".pg";
            } else if (gen_kind == "disk") {
                text = psk::serialize_pg(psk::gen::disk(gen_layers, gen_size, gen_seed));
                default_name = "disk.pg";
            } else if (gen_kind == "hinged-fan") {
                if (gen_n < 1) throw psk::Error("gen hinged-fan: pass k >= 1");
                text = psk::serialize_pg(psk::gen::hinged_fan(gen_n));
                default_name = "hinged-fan" + std::to_string(gen_n) + ".pg";
            } else if (gen_kind == "corridor-hub") {
                text = psk::serialize_pg(psk::gen::corridor_hub(std::max(gen_n, 8)));
                default_name = "corridor-hub.pg";
            } else if (gen_kind == "corridor-pair") {
                text = psk::serialize_pg(psk::gen::corridor_pair(std::max(gen_n, 10)));
                default_name = "corridor-pair.pg";
            } else if (gen_kind == "corridor-private") {
                text = psk::serialize_pg(psk::gen::corridor_private(std::max(gen_n, 10)));
                default_name = "corridor-private.pg";
            } else {
                throw psk::Error("gen: unknown kind " + gen_kind);
            }
            std::string outpath = arg_out.empty() ? default_name : arg_out;
            spit(outpath, text);
            psk::Json j;
            j["version"] = kVersion;
            j["output"] = outpath;
            emit(j);
            return kExitYes;
        }
    } catch (const psk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
