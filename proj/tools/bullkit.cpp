// bullkit: command-line front end for the bullfree library.
#include "report.hpp"

#include <bullfree/coloring.hpp>
#include <bullfree/decomposition.hpp>
#include <bullfree/errors.hpp>
#include <bullfree/io.hpp>
#include <bullfree/kernel.hpp>
#include <bullfree/solver.hpp>
#include <bullfree/testkit.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace bullfree;
using bullkit::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2, kNotInClass = 3, kSizeLimit = 4 };

struct Common {
    std::string input;
    bool json = false;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InputError("cannot write " + p.string());
    out << text;
}

std::string bull_text(const BullWitness& b) {
    std::ostringstream out;
    out << "x1=" << b.x1 + 1 << " x2=" << b.x2 + 1 << " x3=" << b.x3 + 1 << " y=" << b.y + 1 << " z=" << b.z + 1;
    return out.str();
}

json bull_json(const BullWitness& b) {
    return {{"x1", b.x1 + 1}, {"x2", b.x2 + 1}, {"x3", b.x3 + 1}, {"y", b.y + 1}, {"z", b.z + 1}};
}

// BULLKIT_THREADS caps internal parallelism. Everything runs on the calling
// thread, so the value is only validated.
void check_threads_env() {
    const char* v = std::getenv("BULLKIT_THREADS");
    if (!v || !*v) return;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end || n < 1) throw InputError(std::string("BULLKIT_THREADS must be a positive integer, got ") + v);
}

int cmd_check(const Common& c) {
    Instance in = read_instance(c.input);
    const Trigraph& t = in.trigraph.base();
    auto poly = polygamous_vertex(t);
    auto bull = find_bull(t);
    if (c.json) {
        json j = {{"n", t.size()}, {"monogamous", !poly}, {"bull_free", !bull}};
        if (poly) j["polygamous_vertex"] = *poly + 1;
        if (bull) j["bull"] = bull_json(*bull);
        emit(j);
    } else {
        std::cout << "n " << t.size() << '\n';
        std::cout << "monogamous " << (poly ? "no" : "yes") << '\n';
        if (poly) std::cout << "polygamous vertex " << *poly + 1 << '\n';
        std::cout << "bull-free " << (bull ? "no" : "yes") << '\n';
        if (bull) std::cout << "bull " << bull_text(*bull) << '\n';
    }
    return poly || bull ? kNotInClass : kOk;
}

struct SolveArgs {
    Weight k = 0;
    std::string tree;
    int leaf_limit = kDefaultLeafLimit;
};

int cmd_decompose(const Common& c, const std::string& out) {
    Instance in = read_instance(c.input);
    SolveResult r = decompose(in.trigraph);
    std::string text = bullkit::tree_json(r).dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        write_text(out, text);
    return kOk;
}

int cmd_solve(const Common& c, const SolveArgs& a) {
    Instance in = read_instance(c.input);
    SolveOptions opt;
    opt.leaf_limit = a.leaf_limit;
    opt.keep_path = !a.tree.empty();
    SolveResult r = solve(in.trigraph, a.k, opt);
    if (!a.tree.empty()) write_text(a.tree, bullkit::tree_json(r).dump(2) + "\n");
    if (c.json)
        emit(bullkit::verdict_json(r));
    else
        std::cout << bullkit::verdict_text(r);
    return kOk;
}

struct KernelArgs {
    Weight k = 0;
    std::string out_dir;
    std::string replay;
    std::string form = "graph";
    bool no_enumeration = false;
};

int cmd_kernel(const Common& c, const KernelArgs& a) {
    Instance in = read_instance(c.input);
    Oracle oracle;
    if (!a.replay.empty()) {
        std::ifstream f(a.replay);
        if (!f) throw InputError("cannot read " + a.replay);
        json j;
        try {
            j = json::parse(f);
            oracle = replay_oracle(bullkit::answers_from_json(j));
        } catch (const json::exception& e) {
            throw InputError(a.replay + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(a.replay + ": " + e.what());
        }
    } else {
        oracle = a.form == "graph" ? exact_graph_oracle() : exact_oracle();
    }
    KernelOptions opt;
    opt.local_enumeration = !a.no_enumeration;
    KernelTranscript tr = solve_with_oracle(in.trigraph, a.k, oracle, opt);

    fs::create_directories(a.out_dir);
    std::vector<std::string> files;
    for (const QueryRecord& q : tr.queries) {
        std::ostringstream name;
        name << "q" << std::setw(4) << std::setfill('0') << q.query.id << ".txt";
        fs::path p = fs::path(a.out_dir) / name.str();
        // Queries without a graph form fall back to the trigraph.
        if (a.form == "graph" && q.query.graph)
            write_instance_file(p, WeightedTrigraph(*q.query.graph), q.query.target);
        else
            write_instance_file(p, q.query.trigraph, q.query.target);
        files.push_back(name.str());
    }
    json tj = bullkit::transcript_json(tr, files);
    write_text(fs::path(a.out_dir) / "transcript.json", tj.dump(2) + "\n");
    if (c.json) {
        emit(tj);
    } else {
        std::cout << "queries " << tr.queries.size() << '\n';
        std::cout << bullkit::verdict_text(tr.final);
    }
    return kOk;
}

int cmd_color(const Common& c) {
    Instance in = read_instance(c.input);
    const Trigraph& g = in.trigraph.base();
    ColorAssignment semi = semicolor(g);
    std::optional<bool> semi_ok;
    if (g.size() <= testkit::kSemicoloringLimit) semi_ok = !testkit::check_semicoloring(g, semi.colour);
    int levels = 0;
    ColorAssignment chi = chi_color(g, &levels);
    bool proper = is_proper_coloring(g, chi.colour);
    if (c.json) {
        json j = {{"semicoloring", bullkit::coloring_json(semi)},
                  {"coloring", bullkit::coloring_json(chi)},
                  {"proper", proper},
                  {"levels", levels}};
        j["semicoloring"]["valid"] = semi_ok ? json(*semi_ok) : json(nullptr);
        emit(j);
    } else {
        std::cout << "semicoloring palette " << semi.palette << ' '
                  << (semi_ok ? (*semi_ok ? "valid" : "INVALID") : "unchecked") << '\n';
        std::cout << "coloring palette " << chi.palette << ' ' << (proper ? "proper" : "IMPROPER") << " levels "
                  << levels << '\n';
        std::cout << "COLORS";
        for (int x : chi.colour) std::cout << ' ' << x;
        std::cout << '\n';
    }
    return semi_ok.value_or(true) && proper ? kOk : kFailure;
}

struct GenArgs {
    std::string model = "reject";
    testkit::GenSpec spec;
    std::string out;
    std::string manifest;
};

int cmd_gen(const GenArgs& a) {
    if (!a.manifest.empty()) {
        if (a.out.empty()) throw InputError("gen --manifest needs -o <dir>");
        std::ifstream f(a.manifest);
        if (!f) throw InputError("cannot read " + a.manifest);
        std::stringstream buf;
        buf << f.rdbuf();
        testkit::Manifest m = testkit::manifest_from_json(buf.str());
        fs::create_directories(a.out);
        for (std::uint64_t seed : m.seeds) {
            testkit::GenSpec s = m.spec;
            s.seed = seed;
            std::string name = std::string(testkit::to_string(s.model)) + "-n" + std::to_string(s.n) + "-s" +
                               std::to_string(seed) + ".txt";
            write_instance_file(fs::path(a.out) / name, testkit::generate(s));
        }
        std::cout << "wrote " << m.seeds.size() << " instances to " << a.out << '\n';
        return kOk;
    }
    auto model = testkit::parse_model(a.model);
    if (!model) throw InputError("unknown model " + a.model);
    testkit::GenSpec s = a.spec;
    s.model = *model;
    if (s.n < 0 || s.weight_min > s.weight_max || s.weight_min < 0) throw InputError("bad generator parameters");
    WeightedTrigraph t = testkit::generate(s);
    std::string text = "c " + testkit::spec_to_json(s) + "\n" + to_text(t);
    if (a.out.empty())
        std::cout << text;
    else
        write_text(a.out, text);
    return kOk;
}

int cmd_oracle(const Common& c, bool cuts) {
    Instance in = read_instance(c.input);
    json j;
    auto ba = testkit::brute_alpha(in.trigraph);
    j["alpha"] = ba.weight;
    j["witness"] = bullkit::vertices_json(ba.set);
    if (in.target) j["at_least_target"] = ba.weight >= *in.target;
    if (cuts) {
        auto bc = testkit::brute_cuts(in.trigraph.base());
        json hs = json::array();
        for (const auto& x : bc.homogeneous_sets) hs.push_back(bullkit::vertices_json(x));
        auto pairs = [](const std::vector<Split>& ps) {
            json out = json::array();
            for (const Split& s : ps) out.push_back({{"A", bullkit::vertices_json(s.a)}, {"B", bullkit::vertices_json(s.b)}});
            return out;
        };
        j["homogeneous_sets"] = hs;
        j["small_pairs"] = pairs(bc.small_pairs);
        j["proper_pairs"] = pairs(bc.proper_pairs);
    }
    if (c.json) {
        emit(j);
        return kOk;
    }
    std::cout << "ALPHA " << ba.weight << "\nWITNESS";
    for (Vertex v : ba.set) std::cout << ' ' << v + 1;
    std::cout << '\n';
    if (in.target) std::cout << "TARGET " << *in.target << ' ' << (ba.weight >= *in.target ? "YES" : "NO") << '\n';
    if (cuts) {
        std::cout << "homogeneous sets " << j["homogeneous_sets"].size() << '\n';
        std::cout << "small pairs " << j["small_pairs"].size() << '\n';
        std::cout << "proper pairs " << j["proper_pairs"].size() << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bullkit: decomposition, weighted stable sets and colourings of bull-free trigraphs"};
    app.require_subcommand(1);

    Common common;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", common.input, "instance file")->required()->check(CLI::ExistingFile);
        sub->add_flag("--json", common.json, "JSON output");
    };

    auto* check = app.add_subcommand("check", "report monogamy and bull-freeness (exit 3 with a witness)");
    add_input(check);

    std::string tree_out;
    auto* dec = app.add_subcommand("decompose", "decomposition tree as JSON");
    dec->add_option("input", common.input, "instance file")->required()->check(CLI::ExistingFile);
    dec->add_option("-o,--output", tree_out, "write the tree here instead of stdout");

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "decide alpha >= k, or report alpha with a witness");
    add_input(solve_cmd);
    solve_cmd->add_option("-k", sa.k, "target weight")->required()->check(CLI::Range(Weight{1}, Weight{1} << 40));
    solve_cmd->add_option("--tree", sa.tree, "also write the decomposition tree");
    solve_cmd->add_option("--leaf-limit", sa.leaf_limit, "branch-and-bound size limit")->check(CLI::PositiveNumber);

    KernelArgs ka;
    auto* kernel = app.add_subcommand("kernel", "Turing kernel run: query files plus transcript.json");
    add_input(kernel);
    kernel->add_option("-k", ka.k, "target weight")->required()->check(CLI::Range(Weight{1}, Weight{1} << 20));
    kernel->add_option("-o,--output", ka.out_dir, "output directory")->required();
    kernel->add_option("--replay", ka.replay, "answers file (a transcript or {\"answers\": [...]})")
        ->check(CLI::ExistingFile);
    kernel->add_option("--form", ka.form, "query file form")->check(CLI::IsMember({"graph", "trigraph"}));
    kernel->add_flag("--no-enumeration", ka.no_enumeration, "query the oracle instead of enumerating locally");

    auto* color = app.add_subcommand("color", "semicoloring and proper colouring of a bull-free graph");
    add_input(color);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a bull-free monogamous instance");
    gen->add_option("--model", ga.model, "reject, t1, t1-complement, complete-sum, substitution, pair-expansion");
    gen->add_option("-n", ga.spec.n, "vertex count");
    gen->add_option("--seed", ga.spec.seed, "seed");
    gen->add_option("--wmin", ga.spec.weight_min, "minimum vertex weight");
    gen->add_option("--wmax", ga.spec.weight_max, "maximum vertex weight");
    gen->add_option("--density", ga.spec.density, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--switchable", ga.spec.switchable, "switchable pair rate")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--parts", ga.spec.parts, "summands or blocks")->check(CLI::PositiveNumber);
    gen->add_option("--manifest", ga.manifest, "generate every seed of a corpus manifest")->check(CLI::ExistingFile);
    gen->add_option("-o,--output", ga.out, "output file (directory with --manifest)");

    bool cuts = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force alpha (n <= 20) and cuts (n <= 10)");
    add_input(oracle);
    oracle->add_flag("--cuts", cuts, "also list every homogeneous set and pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        check_threads_env();
        if (*check) return cmd_check(common);
        if (*dec) return cmd_decompose(common, tree_out);
        if (*solve_cmd) return cmd_solve(common, sa);
        if (*kernel) return cmd_kernel(common, ka);
        if (*color) return cmd_color(common);
        if (*gen) return cmd_gen(ga);
        if (*oracle) return cmd_oracle(common, cuts);
    } catch (const NotInClass& e) {
        std::cerr << "not in class: " << e.what() << '\n';
        return kNotInClass;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return kSizeLimit;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const WeightOverflow& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const OracleInconsistency& e) {
        std::cerr << "oracle: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
