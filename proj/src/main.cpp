// maxdet: exact construction, verification, bounding, and certification of
// maximal-determinant matrices over roots of unity.
//
// Exit codes: 0 = success (including an inconclusive feasibility verdict),
//             1 = verification failure, definite infeasibility, unfinished
//                 certificate, or unsuccessful search,
//             2 = usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxdet/analysis.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/feasibility.hpp"
#include "maxdet/matrix.hpp"
#include "maxdet/search.hpp"

using json = nlohmann::ordered_json;
using namespace maxdet;

namespace {

// Machine-readable run report. Timing is deliberately omitted so that
// identical inputs (and seed) produce byte-identical output.
struct RunReport {
    std::string command;
    json parameters = json::object();
    json outputs = json::object();

    void emit() const {
        json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["outputs"] = outputs;
        std::cout << j.dump(2) << "\n";
    }
};

unsigned thread_budget() {
    const char* env = std::getenv("MAXDET_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    return v >= 1 ? static_cast<unsigned>(v) : 1;
}

std::string default_corpus_dir() {
#ifdef MAXDET_CORPUS_DIR
    return MAXDET_CORPUS_DIR;
#else
    return "corpus";
#endif
}

// FNV-1a, for corpus content checksums in reports.
std::string checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    unsigned long long h = 1469598103934665603ull;
    char c;
    while (in.get(c)) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::vector<unsigned> parse_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<unsigned>(std::stoul(tok)));
    return out;
}

json report_json(const FeasibilityReport& rep) {
    json j;
    j["verdict"] = rep.verdict == Verdict::INFEASIBLE     ? "INFEASIBLE"
                   : rep.verdict == Verdict::NOT_APPLICABLE ? "NOT_APPLICABLE"
                                                            : "FEASIBLE_UNKNOWN";
    if (rep.infeasible()) j["reason"] = rep.describe();
    return j;
}

json gram_json(const GramMatrix& G) {
    json rows = json::array();
    for (size_t i = 0; i < G.n; ++i) {
        json row = json::array();
        for (size_t j = 0; j < G.n; ++j) row.push_back(G.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

int cmd_construct(const std::string& name, const std::vector<long>& args,
                  const std::string& outfile) {
    RootMatrix M;
    auto need = [&](size_t k) {
        if (args.size() != k)
            throw CLI::ValidationError("construct " + name + " expects " + std::to_string(k) +
                                       " integer argument(s)");
    };
    if (name == "fourier") {
        need(1);
        M = fourier(static_cast<size_t>(args[0]));
    } else if (name == "butson2p") {
        need(1);
        M = butson_2p(static_cast<unsigned>(args[0]));
    } else if (name == "dawson") {
        need(4);
        M = dawson_4p(static_cast<unsigned>(args[0]),
                      {static_cast<unsigned>(args[1]), static_cast<unsigned>(args[2]),
                       static_cast<unsigned>(args[3])});
    } else if (name == "paley-core") {
        need(2);
        M = paley_core(static_cast<unsigned>(args[0]), static_cast<unsigned>(args[1]));
    } else if (name == "gw-paley") {
        need(2);
        M = gw_paley(static_cast<unsigned>(args[0]), static_cast<unsigned>(args[1]));
    } else if (name == "complex-paley") {
        need(1);
        M = complex_paley(static_cast<unsigned>(args[0]));
    } else {
        throw CLI::ValidationError("unknown construction: " + name);
    }
    std::string text = serialize_rum(M);
    if (outfile.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outfile);
        out << text;
    }
    return 0;
}

int cmd_verify(const std::string& file, const std::string& claim, bool json_out) {
    RootMatrix M = load_rum(file);
    VerifyResult res = verify(M, upper(claim));
    if (json_out) {
        RunReport rep;
        rep.command = "verify";
        rep.parameters["file"] = file;
        rep.parameters["claim"] = upper(claim);
        rep.parameters["checksum"] = checksum(file);
        rep.outputs["ok"] = res.ok;
        rep.outputs["diagnostics"] = res.diagnostics;
        rep.emit();
    } else {
        std::cout << (res.ok ? "PASS" : "FAIL") << " " << file << " claim " << upper(claim)
                  << (res.ok ? "" : ": " + res.diagnostics) << "\n";
    }
    return res.ok ? 0 : 1;
}

int cmd_bounds(unsigned n, unsigned m, bool json_out) {
    BoundReport b = bounds(n, m);
    if (json_out) {
        RunReport rep;
        rep.command = "bounds";
        rep.parameters["n"] = n;
        rep.parameters["m"] = m;
        rep.outputs["sigma"] = b.sigma.get_str();
        rep.outputs["hadamard_sq"] = b.hadamard_sq.get_str();
        rep.outputs["barba_sq"] = b.barba_sq.get_str();
        rep.outputs["ew_sq"] = b.ew_sq.get_str();
        rep.outputs["ehlich_applicable"] = b.ehlich_applicable;
        if (b.ehlich_applicable) {
            rep.outputs["ehlich_sq_num"] = b.ehlich_sq.get_num().get_str();
            rep.outputs["ehlich_sq_den"] = b.ehlich_sq.get_den().get_str();
        }
        rep.outputs["applicable"] = b.applicable;
        rep.emit();
    } else {
        std::cout << "n=" << n << " m=" << m << " sigma=" << b.sigma.get_str() << "\n"
                  << "hadamard_sq " << b.hadamard_sq.get_str() << "\n"
                  << "barba_sq    " << b.barba_sq.get_str() << "\n"
                  << "ew_sq       " << b.ew_sq.get_str() << "\n";
        if (b.ehlich_applicable)
            std::cout << "ehlich_sq   " << b.ehlich_sq.get_str() << "\n";
        std::cout << "applicable  " << b.applicable << "\n";
    }
    return 0;
}

int cmd_feasible(const std::string& test, const std::vector<long>& a, bool json_out) {
    FeasibilityReport rep;
    auto need = [&](size_t k) {
        if (a.size() != k)
            throw CLI::ValidationError("feasible " + test + " expects " + std::to_string(k) +
                                       " integer argument(s)");
    };
    if (test == "brc") {
        need(3);
        rep = brc(a[0], a[1], a[2]);
    } else if (test == "bose-connor") {
        need(5);
        rep = bose_connor({a[0], a[1], a[2], a[3], a[4]});
    } else if (test == "tamura") {
        need(1);
        rep = tamura(a[0]);
    } else if (test == "butson") {
        need(3);
        rep = butson_pf(a[0], a[1], static_cast<unsigned>(a[2]));
    } else if (test == "quh") {
        need(2);
        rep = quh(a[0], a[1]);
    } else if (test == "barba3") {
        need(1);
        rep = barba3(a[0]);
    } else if (test == "barba4") {
        need(1);
        rep = barba4(a[0]);
    } else {
        throw CLI::ValidationError("unknown feasibility test: " + test);
    }
    if (json_out) {
        RunReport out;
        out.command = "feasible";
        out.parameters["test"] = test;
        json args = json::array();
        for (long v : a) args.push_back(v);
        out.parameters["args"] = args;
        out.outputs = report_json(rep);
        out.emit();
    } else {
        std::cout << (rep.infeasible() ? "INFEASIBLE: " + rep.describe()
                      : rep.verdict == Verdict::NOT_APPLICABLE ? std::string("NOT_APPLICABLE")
                                                               : std::string("FEASIBLE_UNKNOWN"))
                  << "\n";
    }
    return rep.infeasible() ? 1 : 0;
}

GddScanSpec gdd_table_spec(const std::string& name) {
    GddScanSpec s;
    if (name == "gdd-even-m2mod4") {
        s = {2, 10, 2, 50, 2, 0, 4, 2, 1, false, false};
    } else if (name == "gdd-resolvable-m2mod4") {
        s = {2, 100, 2, 100, 2, 0, 4, 2, 1, true, false};
    } else if (name == "gdd-even-modd") {
        s = {2, 10, 1, 49, 2, 0, 2, 1, 1, false, false};
    } else if (name == "gdd-resolvable-rsquare") {
        s = {2, 800, 1, 800, 2, 0, 2, 1, 1, true, true};
    } else if (name == "gdd-odd-odd") {
        s = {3, 9, 3, 49, 2, 1, 2, 1, 1, false, false};
    } else if (name == "gdd-resolvable-odd") {
        s = {3, 49, 3, 99, 2, 1, 2, 1, 1, true, false};
    } else {
        throw CLI::ValidationError("unknown table: " + name);
    }
    return s;
}

int cmd_tables(const std::string& name, bool json_out) {
    RunReport rep;
    rep.command = "tables";
    rep.parameters["name"] = name;
    if (name == "planes") {
        auto blocked = plane_orders_blocked(100);
        if (json_out) {
            rep.outputs["blocked"] = blocked;
            rep.emit();
        } else {
            for (long n : blocked) std::cout << n << "\n";
        }
        return 0;
    }
    if (name == "tamura") {
        std::vector<long> feasible_m;
        for (long m = 1; m < 100000; m += 2)
            if (tamura(m).verdict == Verdict::FEASIBLE_UNKNOWN) feasible_m.push_back(m);
        if (json_out) {
            rep.outputs["feasible_m"] = feasible_m;
            rep.emit();
        } else {
            for (long m : feasible_m) std::cout << m << "\n";
        }
        return 0;
    }
    auto rows = gdd_scan(gdd_table_spec(name));
    if (json_out) {
        json out = json::array();
        for (const auto& r : rows) {
            json j;
            j["n"] = r.params.n;
            j["m"] = r.params.m;
            j["r"] = r.params.r;
            j["lambda1"] = r.params.lambda1;
            j["reason"] = r.report.short_reason();
            out.push_back(j);
        }
        rep.outputs["rows"] = out;
        rep.emit();
    } else {
        std::cout << "n\tm\tr\tlambda1\treason\n";
        for (const auto& r : rows)
            std::cout << r.params.n << "\t" << r.params.m << "\t" << r.params.r << "\t"
                      << r.params.lambda1 << "\t" << r.report.short_reason() << "\n";
    }
    return 0;
}

int cmd_corpus(const std::string& dir, bool json_out) {
    std::string manifest = dir + "/MANIFEST.tsv";
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot open " + manifest);
    RunReport rep;
    rep.command = "corpus";
    rep.parameters["dir"] = dir;
    json results = json::object(), checksums = json::object();
    bool all_ok = true;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("malformed manifest line: " + line);
        std::string file = line.substr(0, tab), claim = line.substr(tab + 1);
        std::string path = dir + "/" + file;
        checksums[file] = checksum(path);
        std::string verdict;
        try {
            VerifyResult res = verify(load_rum(path), claim);
            verdict = res.ok ? "PASS" : "FAIL: " + res.diagnostics;
            all_ok = all_ok && res.ok;
        } catch (const std::exception& e) {
            verdict = std::string("ERROR: ") + e.what();
            all_ok = false;
        }
        results[file] = verdict;
        if (!json_out) std::cout << verdict << " " << file << " claim " << claim << "\n";
    }
    if (json_out) {
        rep.outputs["results"] = results;
        rep.outputs["checksums"] = checksums;
        rep.outputs["all_ok"] = all_ok;
        rep.emit();
    }
    return all_ok ? 0 : 1;
}

int cmd_search_gram(unsigned n, unsigned m, const std::string& min_detsq, bool json_out) {
    auto grams = gram_enumerate(n, m, Int(min_detsq));
    if (json_out) {
        RunReport rep;
        rep.command = "search gram";
        rep.parameters["n"] = n;
        rep.parameters["m"] = m;
        rep.parameters["min_detsq"] = min_detsq;
        json out = json::array();
        for (const auto& g : grams) {
            json j;
            j["det"] = det_exact(g.g).to_int().get_str();
            j["gram"] = gram_json(g);
            out.push_back(j);
        }
        rep.outputs["count"] = grams.size();
        rep.outputs["grams"] = out;
        rep.emit();
    } else {
        std::cout << grams.size() << " Gram matrices with det >= " << min_detsq << "\n";
        for (const auto& g : grams) std::cout << "det " << det_exact(g.g).to_int().get_str() << "\n";
    }
    return 0;
}

int cmd_search_certify(unsigned n, unsigned m, const std::string& target, bool json_out) {
    RootMatrix M = load_rum(target);
    Certificate cert = certify_max(n, m, M);
    if (json_out) {
        RunReport rep;
        rep.command = "search certify";
        rep.parameters["n"] = n;
        rep.parameters["m"] = m;
        rep.parameters["target"] = target;
        rep.parameters["checksum"] = checksum(target);
        rep.outputs["target_det_sq"] = cert.target_det_sq.get_str();
        rep.outputs["certified"] = cert.certified();
        json elims = json::array();
        for (const auto& e : cert.eliminations) {
            json j;
            j["det"] = e.det_sq.get_str();
            j["reason"] = elim_reason_str(e.reason);
            elims.push_back(j);
        }
        rep.outputs["eliminations"] = elims;
        rep.outputs["survivors"] = cert.survivors.size();
        rep.emit();
    } else {
        std::cout << "target |det|^2 = " << cert.target_det_sq.get_str() << "\n"
                  << cert.eliminations.size() << " candidates above target eliminated, "
                  << cert.survivors.size() << " survivors\n"
                  << (cert.certified() ? "CERTIFIED maximal" : "NOT certified") << "\n";
    }
    return cert.certified() ? 0 : 1;
}

int cmd_search_paley(unsigned p, unsigned h, unsigned rows, unsigned long long seed,
                     bool json_out) {
    auto sub = paley_submatrix(p, h, rows, seed);
    if (json_out) {
        RunReport rep;
        rep.command = "search paley-sub";
        rep.parameters["p"] = p;
        rep.parameters["h"] = h;
        rep.parameters["rows"] = rows;
        rep.parameters["seed"] = seed;
        rep.outputs["found"] = sub.has_value();
        if (sub) {
            rep.outputs["rows"] = sub->rows;
            rep.outputs["cols"] = sub->cols;
        }
        rep.emit();
    } else if (sub) {
        std::cout << "found " << h << "x" << h << " Hadamard submatrix\nrows:";
        for (unsigned r : sub->rows) std::cout << " " << r;
        std::cout << "\ncols:";
        for (unsigned c : sub->cols) std::cout << " " << c;
        std::cout << "\n";
    } else {
        std::cout << "not found\n";
    }
    return sub ? 0 : 1;
}

int cmd_search_residue(unsigned p, const std::string& plus, const std::string& minus,
                       bool json_out) {
    auto r = residue_pattern(p, parse_list(plus), parse_list(minus));
    if (json_out) {
        RunReport rep;
        rep.command = "search residue";
        rep.parameters["p"] = p;
        rep.parameters["plus"] = plus;
        rep.parameters["minus"] = minus;
        rep.outputs["found"] = r.has_value();
        if (r) rep.outputs["r"] = *r;
        rep.emit();
    } else if (r) {
        std::cout << *r << "\n";
    } else {
        std::cout << "none\n";
    }
    return r ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxdet: exact maximal-determinant matrices over roots of unity"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit a machine-readable run report");
    (void)thread_budget();  // reserved for parallel tree search; current build is single-threaded

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a named matrix");
    c_construct->fallthrough();
    std::string cons_name, cons_out;
    std::vector<long> cons_args;
    c_construct->add_option("name", cons_name)->required();
    c_construct->add_option("args", cons_args);
    c_construct->add_option("-o,--output", cons_out);

    // verify
    auto* c_verify = app.add_subcommand("verify", "verify a matrix file against a claim");
    c_verify->fallthrough();
    std::string v_file, v_claim;
    c_verify->add_option("file", v_file)->required();
    c_verify->add_option("--claim", v_claim)->required();

    // bounds
    auto* c_bounds = app.add_subcommand("bounds", "determinant bounds at order n over m-th roots");
    c_bounds->fallthrough();
    unsigned b_n = 0, b_m = 0;
    c_bounds->add_option("n", b_n)->required();
    c_bounds->add_option("m", b_m)->required();

    // feasible
    auto* c_feas = app.add_subcommand("feasible", "run a feasibility test");
    c_feas->fallthrough();
    std::string f_test;
    std::vector<long> f_args;
    bool f_strict = false;
    c_feas->add_option("test", f_test)->required();
    c_feas->add_option("args", f_args);
    c_feas->add_flag("--strict", f_strict,
                     "accepted for compatibility; the infeasible verdict always exits 1");

    // tables
    auto* c_tables = app.add_subcommand("tables", "print a reproduced table");
    c_tables->fallthrough();
    std::string t_name;
    c_tables->add_option("name", t_name)->required();

    // corpus
    auto* c_corpus = app.add_subcommand("corpus", "verify every bundled matrix");
    c_corpus->fallthrough();
    std::string corpus_dir = default_corpus_dir();
    c_corpus->add_option("--dir", corpus_dir);

    // search
    auto* c_search = app.add_subcommand("search", "enumeration and search tools");
    c_search->fallthrough();
    c_search->require_subcommand(1);
    auto* s_gram = c_search->add_subcommand("gram", "enumerate candidate Gram matrices");
    s_gram->fallthrough();
    unsigned sg_n = 0, sg_m = 0;
    std::string sg_min = "1";
    s_gram->add_option("n", sg_n)->required();
    s_gram->add_option("m", sg_m)->required();
    s_gram->add_option("--min-detsq", sg_min)->required();
    auto* s_cert = c_search->add_subcommand("certify", "certify a maximal-determinant matrix");
    s_cert->fallthrough();
    unsigned sc_n = 0, sc_m = 0;
    std::string sc_target;
    s_cert->add_option("n", sc_n)->required();
    s_cert->add_option("m", sc_m)->required();
    s_cert->add_option("--target", sc_target)->required();
    auto* s_paley = c_search->add_subcommand("paley-sub", "Hadamard submatrix of a Paley core");
    s_paley->fallthrough();
    unsigned sp_p = 0, sp_h = 0, sp_rows = 700;
    unsigned long long sp_seed = 1;
    s_paley->add_option("p", sp_p)->required();
    s_paley->add_option("hsize", sp_h)->required();
    s_paley->add_option("--rows", sp_rows);
    s_paley->add_option("--seed", sp_seed);
    auto* s_res = c_search->add_subcommand("residue", "quadratic-residue shift pattern");
    s_res->fallthrough();
    unsigned sr_p = 0;
    std::string sr_plus, sr_minus;
    s_res->add_option("p", sr_p)->required();
    s_res->add_option("--plus", sr_plus);
    s_res->add_option("--minus", sr_minus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_construct) return cmd_construct(cons_name, cons_args, cons_out);
        if (*c_verify) return cmd_verify(v_file, v_claim, json_out);
        if (*c_bounds) return cmd_bounds(b_n, b_m, json_out);
        if (*c_feas) return cmd_feasible(f_test, f_args, json_out);
        if (*c_tables) return cmd_tables(t_name, json_out);
        if (*c_corpus) return cmd_corpus(corpus_dir, json_out);
        if (*s_gram) return cmd_search_gram(sg_n, sg_m, sg_min, json_out);
        if (*s_cert) return cmd_search_certify(sc_n, sc_m, sc_target, json_out);
        if (*s_paley) return cmd_search_paley(sp_p, sp_h, sp_rows, sp_seed, json_out);
        if (*s_res) return cmd_search_residue(sr_p, sr_plus, sr_minus, json_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
