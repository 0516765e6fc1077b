#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "domset/enumerators.hpp"
#include "domset/io.hpp"
#include "domset/oracle.hpp"
#include "domset/stream.hpp"

namespace {

using namespace domset;

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return read_all(in);
}

VertexSet read_bicolor(const std::string& path, const ParsedGraph& pg) {
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<int> vs;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label)) continue;
        if (label[0] == '#') continue;
        vs.push_back(pg.vertex_of(label));
    }
    return VertexSet::from_unsorted(std::move(vs));
}

// labels ascending: numerically when both tokens are integers, otherwise
// lexicographically
bool label_less(const std::string& a, const std::string& b) {
    auto as_num = [](const std::string& s, long long& out) {
        if (s.empty()) return false;
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        out = std::stoll(s);
        return true;
    };
    long long na = 0, nb = 0;
    if (as_num(a, na) && as_num(b, nb)) return na != nb ? na < nb : a < b;
    return a < b;
}

std::string solution_line(const VertexSet& s, const std::vector<std::string>& labels) {
    std::vector<std::string> parts;
    parts.reserve(s.size());
    for (int v : s) parts.push_back(labels[v]);
    std::sort(parts.begin(), parts.end(), label_less);
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

std::string pick_algorithm(const Graph& g, const VertexSet& a) {
    if (!find_triangle_within(g, a)) return "triangle-free";
    ClassReport rep = detect_classes(g);
    if (rep.paw_free) return "paw-free";
    if (rep.diamond_free) return "diamond-free";
    return "general";
}

struct Options {
    std::string algorithm = "auto";
    std::string format = "edges";
    std::string bicolor_file;
    std::string input_file;
    std::string generate_spec;
    std::string sat_file;
    bool count_only = false;
    bool stats = false;
    bool check_extension = false;
    std::uint64_t seed = 1;
};

int run(const Options& opt) {
    ParsedGraph pg;
    VertexSet forced_from_sat;
    bool have_sat = !opt.sat_file.empty();

    if (have_sat) {
        CnfFormula f = parse_dimacs_cnf(read_file(opt.sat_file));
        ExtensionInstance inst = sat_to_extension_instance(f);
        pg.graph = inst.graph;
        pg.labels = inst.labels;
        for (int v = 0; v < inst.graph.vertex_count(); ++v) pg.index_of.emplace(inst.labels[v], v);
        forced_from_sat = inst.forced;
        if (!opt.check_extension) {
            // export the instance: forced set as comments, then the edges
            for (int v : forced_from_sat) std::cout << "# A " << pg.labels[v] << '\n';
            std::cout << serialize_edges(pg);
            return 0;
        }
    } else if (!opt.generate_spec.empty()) {
        pg = parsed_from_graph(generate_from_spec(opt.generate_spec, opt.seed));
    } else {
        std::string text = opt.input_file.empty() ? read_all(std::cin) : read_file(opt.input_file);
        pg = parse_graph(text, parse_format(opt.format));
    }

    VertexSet a = VertexSet::full(pg.graph.vertex_count());
    if (!opt.bicolor_file.empty()) a = read_bicolor(opt.bicolor_file, pg);
    if (have_sat) a = forced_from_sat;

    if (opt.check_extension) {
        bool ok = oracle_extension(pg.graph, a);
        std::cout << (ok ? "feasible" : "infeasible") << std::endl;
        return 0;
    }

    std::string algo = opt.algorithm;
    if (algo == "auto") {
        algo = pick_algorithm(pg.graph, a);
        if (opt.stats) std::cerr << "# algorithm: " << algo << '\n';
    }

    BicoloredGraph bg(pg.graph, a);
    long long count = 0;
    double max_delay_ms = 0.0;
    auto t_prev = std::chrono::steady_clock::now();
    auto emit = [&](const VertexSet& s) {
        auto now = std::chrono::steady_clock::now();
        max_delay_ms = std::max(max_delay_ms, std::chrono::duration<double, std::milli>(now - t_prev).count());
        t_prev = now;
        ++count;
        if (!opt.count_only) {
            std::cout << solution_line(s, pg.labels) << '\n';
            std::cout.flush();
        }
    };

    if (algo == "oracle") {
        for (const auto& s : oracle_mds(bg)) emit(s);
    } else {
        StreamPtr stream;
        if (algo == "triangle-free")
            stream = enum_mds_triangle_free(bg);
        else if (algo == "paw-free")
            stream = enum_mds_paw_free(bg);
        else if (algo == "diamond-free")
            stream = enum_mds_diamond_free(bg);
        else if (algo == "general")
            stream = enum_mds_general(bg);
        else if (algo == "ktk2") {
            if (!(a == VertexSet::full(pg.graph.vertex_count())))
                throw InputError("ktk2 mode enumerates D(G) and requires the full vertex set");
            stream = enum_mds_kt_plus_k2(pg.graph);
        } else
            throw InputError("unknown algorithm: " + algo);
        auto cur = stream->start();
        while (auto s = cur->next()) emit(*s);
    }

    if (opt.count_only) std::cout << count << std::endl;
    if (opt.stats)
        std::cerr << "# solutions=" << count << " max_delay_ms=" << max_delay_ms << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate the inclusion-wise minimal dominating sets of a (bicolored) graph"};
    Options opt;
    app.add_option("input", opt.input_file, "graph file (stdin when omitted)");
    app.add_option("--algorithm", opt.algorithm,
                   "auto|triangle-free|paw-free|diamond-free|general|ktk2|oracle")
        ->default_val("auto");
    app.add_option("--format", opt.format, "edges|dimacs")->default_val("edges");
    app.add_option("--bicolor", opt.bicolor_file, "file with one vertex label per line = prescribed set A");
    app.add_flag("--count-only", opt.count_only, "print only the number of solutions");
    app.add_flag("--stats", opt.stats, "print '# solutions=<k> max_delay_ms=<d>' to stderr");
    app.add_option("--seed", opt.seed, "seed for --generate")->default_val(1);
    app.add_option("--generate", opt.generate_spec, "KIND:PARAMS instance generator (see README)");
    app.add_option("--sat", opt.sat_file, "DIMACS CNF file; builds the extension-hardness instance");
    app.add_flag("--check-extension", opt.check_extension,
                 "decide whether A extends to a minimal dominating set (brute force)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return run(opt);
    } catch (const domset::ClassViolation& e) {
        std::cerr << "class violation: " << e.what() << '\n';
        return 3;
    } catch (const domset::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
