// ttl - exact invariants of tamely ramified local-field extensions
//
// Commands:
//   cosets     - enumerate and classify Galois double cosets
//   rectifier  - compute the rectifying character of a jump datum
//   chi        - per-coset character data and their restricted product
//   verify     - run a verification suite (exit 0 iff everything passes)
//   sweep      - emit a per-coset invariant dataset for external analysis
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/config error, 3 I/O error.

#include "ttl/json_io.hpp"
#include "ttl/verify.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ttl;

struct Args {
    std::map<std::string, std::string> kv;
    bool has(const std::string& k) const { return kv.count(k) > 0; }
    std::string get(const std::string& k, const std::string& dflt = "") const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }
    i64 geti(const std::string& k, i64 dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : std::stoll(it->second);
    }
};

int usage(std::ostream& os, int code) {
    os << R"(Usage: ttl <command> [options]

Commands:
  cosets     --p P --m M --e E --f F [--zeta-ef Z] [--format table|json|csv]
  rectifier  --p P --m M --e E --f F [--zeta-ef Z] (--jump-file PATH | --seed N)
             [--conjugate-psi] [--format json]
  chi        same inputs as rectifier; prints per-coset data and the product
  verify     --suite theorem|identity|counts|parities|oracles
             [--seeds N] [--e-max E] [--f-max F] [--p-set 2,3,5,7]
             [--conjugate-psi] [--phi-choice J] [--format text|json] [--out PATH]
  sweep      --p-set LIST --e-max E --f-max F --seeds N [--format csv|json]
             [--out PATH]

Environment:
  TTL_THREADS   worker count for sweeps (default: hardware)
)";
    return code;
}

bool parse_args(int argc, char** argv, int start, Args& out, std::string& err) {
    for (int i = start; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) != 0) {
            err = "unexpected argument: " + a;
            return false;
        }
        a = a.substr(2);
        if (a == "conjugate-psi") {
            out.kv[a] = "1";
            continue;
        }
        if (i + 1 >= argc) {
            err = "missing value for --" + a;
            return false;
        }
        out.kv[a] = argv[++i];
    }
    return true;
}

std::vector<i64> parse_list(const std::string& s) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

ExtShape shape_from_args(const Args& a) {
    return make_ext_shape(a.geti("p", 0), a.geti("m", 1), a.geti("e", 0), a.geti("f", 0),
                          a.geti("zeta-ef", 0), a.geti("phi-choice", 0));
}

JumpDatum datum_from_args(const Args& a, const ExtShape& E) {
    if (a.has("jump-file")) {
        std::ifstream in(a.get("jump-file"));
        if (!in) throw std::ios_base::failure("cannot open " + a.get("jump-file"));
        json j;
        in >> j;
        JumpDatum jd = jump_datum_from_json(j);
        require(jd.shape.e == E.e && jd.shape.f == E.f && jd.shape.q == E.q,
                "jump file does not match the requested shape");
        return jd;
    }
    return random_valid(E, (std::uint64_t)a.geti("seed", 1));
}

GaussConv conv_from_args(const Args& a) {
    return a.has("conjugate-psi") ? GaussConv::conjugate : GaussConv::standard;
}

int cmd_cosets(const Args& a) {
    ExtShape E = shape_from_args(a);
    auto cosets = enumerate_double_cosets(E);
    std::string fmt = a.get("format", "table");
    if (fmt == "json") {
        json j{{"schema", 1}, {"shape", shape_to_json(E)}, {"cosets", json::array()}};
        for (const auto& dc : cosets) j["cosets"].push_back(coset_to_json(dc));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (fmt == "csv") std::cout << "k,i,kind,t_min,deg\n";
    if (fmt == "table") std::cout << "k\ti\tkind\tt_min\tdeg\n";
    for (const auto& dc : cosets) {
        char sep = fmt == "csv" ? ',' : '\t';
        std::cout << dc.k << sep << dc.i << sep << kind_name(dc.kind) << sep << dc.t_min << sep
                  << dc.deg << "\n";
    }
    return 0;
}

int cmd_rectifier(const Args& a) {
    ExtShape E = shape_from_args(a);
    JumpDatum jd = datum_from_args(a, E);
    TameChar mu = full_rectifier(jd, E, conv_from_args(a));
    json j{{"schema", 1},
           {"shape", shape_to_json(E)},
           {"jump_datum", jump_datum_to_json(jd)},
           {"rectifier", tame_char_to_json(mu)}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_chi(const Args& a) {
    ExtShape E = shape_from_args(a);
    JumpDatum jd = datum_from_args(a, E);
    GaussConv conv = conv_from_args(a);
    Occupancy occ = occupancy(jd);
    json j{{"schema", 1},
           {"shape", shape_to_json(E)},
           {"jump_datum", jump_datum_to_json(jd)},
           {"data", json::array()}};
    std::vector<DoubleCoset> nontrivial;
    for (const auto& dc : enumerate_double_cosets(E)) {
        if (dc.kind == Kind::trivial) continue;
        nontrivial.push_back(dc);
        j["data"].push_back(chi_datum_to_json(assign_chi(dc, jd, occ, conv)));
    }
    j["product"] = tame_char_to_json(product_restricted(nontrivial, jd, occ, conv));
    j["rectifier"] = tame_char_to_json(full_rectifier(jd, E, conv));
    std::cout << j.dump(2) << "\n";
    return 0;
}

void emit_report(const std::vector<SuiteResult>& results, const Args& a, bool& all_ok) {
    json report{{"schema", 1}, {"suites", json::array()}};
    for (const auto& r : results) {
        all_ok = all_ok && r.ok();
        json s{{"name", r.name}, {"checks", r.checks}, {"ok", r.ok()},
               {"failures", json::array()}};
        for (size_t i = 0; i < r.failures.size() && i < 20; ++i)
            s["failures"].push_back(r.failures[i]);
        report["suites"].push_back(s);
    }
    std::string text;
    if (a.get("format", "text") == "json") {
        text = report.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& r : results)
            os << (r.ok() ? "pass" : "FAIL") << "  " << r.name << "  (" << r.checks
               << " checks" << (r.ok() ? "" : (", first: " + r.failures.front())) << ")\n";
        text = os.str();
    }
    if (a.has("out")) {
        std::ofstream out(a.get("out"));
        if (!out) throw std::ios_base::failure("cannot write " + a.get("out"));
        out << text;
    } else {
        std::cout << text;
    }
}

int cmd_verify(const Args& a) {
    SweepConfig cfg;
    if (a.has("p-set")) cfg.pset = parse_list(a.get("p-set"));
    cfg.e_max = a.geti("e-max", 12);
    cfg.f_max = a.geti("f-max", 12);
    cfg.seeds = a.geti("seeds", 500);
    cfg.threads = a.geti("threads", 0);
    cfg.conv = conv_from_args(a);
    cfg.phi_choice = a.geti("phi-choice", 0);

    std::string suite = a.get("suite");
    std::vector<SuiteResult> results;
    if (suite == "counts") {
        results.push_back(run_counts(a.geti("e-max", 60)));
        results.push_back(run_evenness());
    } else if (suite == "parities") {
        results.push_back(run_parities());
    } else if (suite == "oracles") {
        results.push_back(run_oracle_signs(a.geti("seeds", 1200)));
        results.push_back(run_gauss());
    } else if (suite == "theorem") {
        results.push_back(run_theorem(cfg));
        results.push_back(run_occupancy(a.geti("occupancy", 10000)));
        results.push_back(run_restriction(cfg));
    } else if (suite == "identity") {
        results.push_back(run_trivial_at_varpi(cfg));
        results.push_back(run_identity(cfg.conv, cfg.phi_choice));
        results.push_back(run_flips());
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    bool ok = true;
    emit_report(results, a, ok);
    return ok ? 0 : 1;
}

int cmd_sweep(const Args& a) {
    SweepConfig cfg;
    if (a.has("p-set")) cfg.pset = parse_list(a.get("p-set"));
    cfg.e_max = a.geti("e-max", 6);
    cfg.f_max = a.geti("f-max", 4);
    cfg.seeds = a.geti("seeds", 16);
    std::string fmt = a.get("format", "csv");
    GaussConv conv = conv_from_args(a);

    std::ostringstream os;
    json rows = json::array();
    if (fmt == "csv")
        os << "p,e,f,zeta_ef,seed,k,i,kind,t_min,deg,occupied,"
              "t0_mu,t1_mu,t0_varpi,t1_varpi,t_W,rect_mu_mult,rect_varpi\n";
    i64 emitted = 0;
    for (i64 p : cfg.pset) {
        for (i64 e = 1; e <= cfg.e_max; ++e) {
            if (e % p == 0) continue;
            for (i64 f = 1; f <= cfg.f_max; ++f) {
                for (i64 s = 0; s < cfg.seeds; ++s) {
                    SplitMix64 rng((std::uint64_t)(p * 1000003 + e * 10007 + f * 101 + s));
                    i64 z = sample_zeta_ef(p, 1, e, f, rng);
                    ExtShape E = make_ext_shape(p, 1, e, f, z);
                    JumpDatum jd = random_valid(E, rng.next());
                    Occupancy occ = occupancy(jd);
                    TameChar mu = full_rectifier(jd, E, conv);
                    for (const auto& dc : enumerate_double_cosets(E)) {
                        if (dc.kind == Kind::trivial) continue;
                        auto tm = t_mu(dc, occ, E);
                        auto tv = t_varpi(dc, occ, E);
                        Rot tw = t_complement(dc, occ, jd, conv);
                        if (fmt == "csv") {
                            os << p << ',' << e << ',' << f << ',' << z << ',' << s << ','
                               << dc.k << ',' << dc.i << ',' << kind_name(dc.kind) << ','
                               << dc.t_min << ',' << dc.deg << ',' << occ.at(dc) << ','
                               << tm.t0 << ',' << tm.t1.str() << ',' << tv.t0 << ','
                               << tv.t1.str() << ',' << tw.str() << ',' << mu.mu_mult << ','
                               << mu.varpi_val.str() << "\n";
                        } else {
                            json row{{"p", p},
                                     {"e", e},
                                     {"f", f},
                                     {"zeta_ef", z},
                                     {"seed", s},
                                     {"coset", coset_to_json(dc)},
                                     {"occupied", occ.at(dc)},
                                     {"t0_mu", tm.t0},
                                     {"t1_mu", tm.t1.str()},
                                     {"t0_varpi", tv.t0},
                                     {"t1_varpi", tv.t1.str()},
                                     {"t_W", tw.str()},
                                     {"rectifier", tame_char_to_json(mu)}};
                            rows.push_back(row);
                        }
                        ++emitted;
                    }
                }
            }
        }
    }
    std::string text = fmt == "csv" ? os.str() : json{{"schema", 1}, {"rows", rows}}.dump(2) + "\n";
    if (a.has("out")) {
        std::ofstream out(a.get("out"));
        if (!out) throw std::ios_base::failure("cannot write " + a.get("out"));
        out << text;
    } else {
        std::cout << text;
    }
    return emitted > 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage(std::cerr, 2);
    std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") return usage(std::cout, 0);
    Args args;
    std::string err;
    if (!parse_args(argc, argv, 2, args, err)) {
        std::cerr << err << "\n";
        return usage(std::cerr, 2);
    }
    try {
        if (cmd == "cosets") return cmd_cosets(args);
        if (cmd == "rectifier") return cmd_rectifier(args);
        if (cmd == "chi") return cmd_chi(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "sweep") return cmd_sweep(args);
        std::cerr << "unknown command: " << cmd << "\n";
        return usage(std::cerr, 2);
    } catch (const std::ios_base::failure& ex) {
        std::cerr << "i/o error: " << ex.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "bad argument: " << ex.what() << "\n";
        return 2;
    } catch (const ttl::error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
