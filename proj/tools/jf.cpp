#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "jf/certificates.hpp"
#include "jf/ffj.hpp"
#include "jf/generators.hpp"
#include "jf/selfcheck.hpp"
#include "jf/serialize.hpp"

namespace {

using namespace jf;

constexpr const char* kVersion = "jf 1.0.0";
constexpr i64 kSchemaVersion = 1;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

void emit_json(Json j) {
    j["schema_version"] = kSchemaVersion;
    std::cout << j.dump(2) << "\n";
}

// flags > config file > environment
struct Config {
    std::string cache_dir;
    int threads = 1;
};

Config resolve_config(const std::string& config_path, const std::string& cache_dir_flag,
                      int threads_flag) {
    Config cfg;
    if (const char* env = std::getenv("JF_CACHE_DIR")) cfg.cache_dir = env;
    if (const char* env = std::getenv("JF_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) cfg.threads = t;
    }
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw DomainError("config file not readable: " + config_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw StructureError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (j.contains("cache_dir") && j["cache_dir"].is_string())
            cfg.cache_dir = j["cache_dir"].get<std::string>();
        if (j.contains("threads") && j["threads"].is_number_integer()) {
            int t = j["threads"].get<int>();
            if (t >= 1) cfg.threads = t;
        }
    }
    if (!cache_dir_flag.empty()) cfg.cache_dir = cache_dir_flag;
    if (threads_flag >= 1) cfg.threads = threads_flag;
    return cfg;
}

std::string render_exponent(i64 num, i64 den) {
    if (den == 1) return std::to_string(num);
    Rational x = rat(num, den);
    return rational_str(x);
}

void print_expansion_text(const FourierExpansion& f) {
    std::cout << "rank " << f.rank();
    if (f.weight) std::cout << "  weight " << *f.weight;
    if (f.index) {
        std::cout << "  index (";
        for (std::size_t i = 0; i < f.index->size(); ++i)
            std::cout << (i ? "," : "") << (*f.index)[i];
        std::cout << ")";
    }
    std::cout << "  prec " << render_exponent(f.prec_num(), f.den_q()) << "\n";
    std::optional<i64> row;
    bool first_term = true;
    for (const auto& [key, value] : f.terms()) {
        if (!row || *row != key.nq) {
            if (row) std::cout << "\n";
            std::cout << "q^" << render_exponent(key.nq, f.den_q()) << ": ";
            row = key.nq;
            first_term = true;
        }
        std::string coeff = rational_str(value);
        if (!first_term) {
            if (!coeff.empty() && coeff[0] == '-') {
                std::cout << " - ";
                coeff = coeff.substr(1);
            } else {
                std::cout << " + ";
            }
        }
        std::cout << coeff;
        for (int i = 0; i < f.rank(); ++i) {
            if (key.r[static_cast<std::size_t>(i)] == 0) continue;
            std::cout << " z" << (f.rank() > 1 ? std::to_string(i + 1) : "") << "^"
                      << render_exponent(key.r[static_cast<std::size_t>(i)], f.den_z());
        }
        first_term = false;
    }
    if (row) std::cout << "\n";
    if (f.terms().empty()) std::cout << "0\n";
}

LatticeDescriptor parse_lattice(const std::string& s) {
    LatticeDescriptor lat;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            lat.scalings.push_back(std::stoll(part));
        } catch (...) {
            throw DomainError("bad lattice spec: " + s);
        }
    }
    if (lat.rank() < 1 || lat.rank() > 2) throw DomainError("lattice rank must be 1 or 2");
    return lat;
}

FourierExpansion load_series(const std::string& gen_name, const std::string& input_path,
                             i64 prec) {
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) throw DomainError("input file not readable: " + input_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw StructureError(std::string("input is not valid JSON: ") + e.what());
        }
        return expansion_from_json(j);
    }
    if (gen_name.empty()) throw DomainError("need a generator name or --input");
    return generator(parse_generator(gen_name), prec);
}

// ---- sweep ----

struct SweepCell {
    i64 k = 0, m = 0, n = 0;
};

std::vector<SweepCell> parse_grid(const Json& grid) {
    std::vector<SweepCell> cells;
    if (grid.contains("cells")) {
        if (!grid["cells"].is_array()) throw StructureError("grid: 'cells' must be an array");
        for (const auto& c : grid["cells"]) {
            if (!c.is_array() || c.size() != 3) throw StructureError("grid: each cell is [k, m, N]");
            cells.push_back({c[0].get<i64>(), c[1].get<i64>(), c[2].get<i64>()});
        }
        return cells;
    }
    auto list = [&](const char* key) {
        std::vector<i64> v;
        if (!grid.contains(key)) return v;
        if (!grid[key].is_array()) throw StructureError(std::string("grid: '") + key + "' must be an array");
        for (const auto& x : grid[key]) v.push_back(x.get<i64>());
        return v;
    };
    auto ks = list("weights"), ms = list("indices"), ns = list("min_ords");
    if (ns.empty()) ns = {0};
    for (i64 k : ks)
        for (i64 m : ms)
            for (i64 n : ns) cells.push_back({k, m, n});
    return cells;
}

Json compute_cell(const SweepCell& cell) {
    Json row;
    row["k"] = cell.k;
    row["m"] = cell.m;
    row["min_ord"] = cell.n;
    auto t0 = std::chrono::steady_clock::now();
    try {
        SpaceSpec spec;
        spec.weight = cell.k;
        spec.index = cell.m;
        spec.min_ord = rat(cell.n);
        spec.flavor = Flavor::holomorphic;
        DimReport rep = dim_report(spec);
        row["dim"] = rep.dim;
        row["active_rows"] = rep.active_rows;
        row["rank"] = rep.rank;
        if (cell.n >= 1) {
            auto cert = certify_vanishing(cell.k, cell.m, cell.n);
            if (cert) {
                row["certificate"] = "certified";
                row["cert_total"] = rational_str(cert->total);
                row["cert_target"] = cert->target;
                row["sound"] = rep.dim == 0;
            } else {
                row["certificate"] = "inconclusive";
                row["cert_total"] = "";
                row["cert_target"] = nullptr;
                row["sound"] = true;
            }
        } else {
            row["certificate"] = "n/a";
            row["cert_total"] = "";
            row["cert_target"] = nullptr;
            row["sound"] = true;
        }
        auto b = bound_refined(std::max<i64>(cell.k, 1), std::max<i64>(cell.m, 1), 1);
        row["bound_refined_lo"] = b.value->lo.str(20);
        row["bound_refined_hi"] = b.value->hi.str(20);
        row["status"] = "ok";
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (auto& ch : msg)
            if (ch == ',' || ch == '"' || ch == '\n') ch = ' ';
        row["status"] = "error: " + msg;
    }
    row["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

std::string cell_key(const SweepCell& c) {
    return std::to_string(c.k) + "/" + std::to_string(c.m) + "/" + std::to_string(c.n);
}

std::string render_table(const std::vector<SweepCell>& cells, const Json& results,
                         const std::string& format) {
    const char* columns[] = {"k",           "m",           "min_ord",     "dim",
                             "active_rows", "rank",        "certificate", "cert_total",
                             "cert_target", "sound",       "bound_refined_lo",
                             "bound_refined_hi", "status"};
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& c : cells) {
            Json row = results.at(cell_key(c));
            row.erase("seconds");
            rows.push_back(row);
        }
        Json out;
        out["schema_version"] = kSchemaVersion;
        out["rows"] = rows;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    bool first = true;
    for (const char* col : columns) {
        os << (first ? "" : ",") << col;
        first = false;
    }
    os << "\n";
    for (const auto& c : cells) {
        const Json& row = results.at(cell_key(c));
        first = true;
        for (const char* col : columns) {
            os << (first ? "" : ",");
            first = false;
            if (!row.contains(col) || row[col].is_null()) continue;
            const Json& v = row[col];
            if (v.is_string())
                os << v.get<std::string>();
            else if (v.is_boolean())
                os << (v.get<bool>() ? "true" : "false");
            else
                os << v.dump();
        }
        os << "\n";
    }
    return os.str();
}

int run_sweep(const std::string& grid_path, const std::string& out_path,
              const std::string& manifest_path, const std::string& format, int threads,
              const std::string& command_line) {
    std::ifstream in(grid_path);
    if (!in) throw DomainError("grid file not readable: " + grid_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string grid_bytes = buf.str();
    Json grid;
    try {
        grid = Json::parse(grid_bytes);
    } catch (const std::exception& e) {
        throw StructureError(std::string("grid file is not valid JSON: ") + e.what());
    }
    std::vector<SweepCell> cells = parse_grid(grid);
    const std::string grid_digest = hex64(fnv1a(grid_bytes));

    Json results = Json::object();
    if (!manifest_path.empty()) {
        std::ifstream mf(manifest_path);
        if (mf) {
            try {
                Json manifest = Json::parse(mf);
                if (manifest.value("grid_digest", "") == grid_digest &&
                    manifest.value("schema_version", i64(0)) == kSchemaVersion &&
                    manifest.contains("cells") && manifest["cells"].is_object())
                    results = manifest["cells"];
            } catch (const std::exception&) {
                // unreadable manifest: recompute everything
            }
        }
    }

    std::vector<const SweepCell*> missing;
    for (const auto& c : cells)
        if (!results.contains(cell_key(c))) missing.push_back(&c);

    std::vector<Json> computed(missing.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= missing.size()) return;
            computed[i] = compute_cell(*missing[i]);
        }
    };
    if (threads <= 1 || missing.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int n = std::min<int>(threads, static_cast<int>(missing.size()));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < missing.size(); ++i) results[cell_key(*missing[i])] = computed[i];

    const std::string table = render_table(cells, results, format);
    const std::string out_digest = hex64(fnv1a(table));

    if (!manifest_path.empty()) {
        Json manifest;
        manifest["schema_version"] = kSchemaVersion;
        manifest["version"] = kVersion;
        manifest["command"] = command_line;
        manifest["grid_digest"] = grid_digest;
        manifest["output_digest"] = out_digest;
        manifest["format"] = format;
        manifest["cells"] = results;
        std::ofstream mf(manifest_path, std::ios::trunc);
        if (!mf) throw DomainError("cannot write manifest: " + manifest_path);
        mf << manifest.dump(2) << "\n";
    }
    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream of(out_path, std::ios::trunc);
        if (!of) throw DomainError("cannot write output: " + out_path);
        of << table;
        std::cout << "wrote " << cells.size() << " rows to " << out_path << " (digest "
                  << out_digest << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with classical Jacobi forms"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, cache_dir_flag;
    int threads_flag = 0;
    app.add_option("--config", config_path, "JSON config file ({\"cache_dir\", \"threads\"})");
    app.add_option("--cache-dir", cache_dir_flag, "directory for sweep manifests");

    int exit_code = 0;
    std::ostringstream cmdline;
    for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

    // gen
    auto* gen = app.add_subcommand("gen", "print a generator's Fourier expansion");
    std::string gen_name;
    i64 gen_prec = 10;
    bool gen_json = false;
    gen->add_option("name", gen_name,
                    "eta|theta|delta|e4|e6|phi-m2-1|phi-0-1|phi-m1-2|wp-norm")
        ->required();
    gen->add_option("--prec", gen_prec, "q-precision (exclusive)")->default_val(10);
    gen->add_flag("--json", gen_json, "serialize as JSON");
    gen->callback([&] {
        FourierExpansion f = generator(parse_generator(gen_name), gen_prec);
        if (gen_json)
            emit_json(expansion_json(f));
        else
            print_expansion_text(f);
    });

    // dim / basis share flags
    struct SpaceArgs {
        i64 weight = 0;
        i64 index = 1;
        std::string lattice = "1";
        std::string min_ord = "0";
        bool weak = false;
        bool plus = false;
        i64 prec = -1;
        bool json = false;
    };
    auto add_space_flags = [](CLI::App* sub, SpaceArgs& a, bool require_weight = true) {
        auto* w = sub->add_option("--weight,-k", a.weight, "modular weight");
        if (require_weight) w->required();
        sub->add_option("--index,-m", a.index, "index multiple of the lattice form")
            ->default_val(1);
        sub->add_option("--lattice", a.lattice, "scalings d1[,d2] of A1 summands")
            ->default_val("1");
        sub->add_option("--min-ord", a.min_ord, "required vanishing order at infinity")
            ->default_val("0");
        sub->add_flag("--weak", a.weak, "weak forms instead of holomorphic");
        sub->add_flag("--plus", a.plus, "impose c(n, r) = c(n, -r)");
        sub->add_option("--prec", a.prec, "working q-precision (-1 = minimal sound)")
            ->default_val(-1);
        sub->add_flag("--json", a.json, "JSON output");
    };
    auto to_spec = [](const SpaceArgs& a) {
        SpaceSpec spec;
        spec.weight = a.weight;
        spec.lattice = parse_lattice(a.lattice);
        spec.index = a.index;
        spec.min_ord = parse_rational(a.min_ord);
        spec.flavor = a.weak ? Flavor::weak : Flavor::holomorphic;
        spec.invariance = a.plus ? Invariance::plus : Invariance::none;
        return spec;
    };

    auto* dim = app.add_subcommand("dim", "dimension of a space of Jacobi forms");
    SpaceArgs dim_args;
    add_space_flags(dim, dim_args);
    dim->callback([&] {
        DimReport rep = dim_report(to_spec(dim_args), dim_args.prec);
        if (dim_args.json)
            emit_json(dim_report_json(rep));
        else
            std::cout << rep.dim << "\n";
    });

    auto* basis = app.add_subcommand("basis", "explicit basis of a space of Jacobi forms");
    SpaceArgs basis_args;
    add_space_flags(basis, basis_args);
    basis->callback([&] {
        SpaceSpec spec = to_spec(basis_args);
        i64 prec = basis_args.prec;
        if (prec < 0) {
            i64 m = spec.lattice.rank() == 1 ? spec.lattice.scalings[0] * spec.index : 1;
            prec = spec.flavor == Flavor::holomorphic
                       ? minimal_holomorphic_prec(m, spec.min_ord)
                       : 10;
        }
        SpaceBasis b = basis_for(spec, prec);
        if (basis_args.json) {
            emit_json(basis_json(b));
        } else {
            std::cout << "dim " << b.dim() << " at prec " << b.prec << "\n";
            for (std::size_t i = 0; i < b.elements.size(); ++i) {
                std::cout << "-- element " << i << " --\n";
                print_expansion_text(b.elements[i]);
            }
        }
    });

    // ord
    auto* ord = app.add_subcommand("ord", "vanishing order at a torsion point x in [0,1)");
    std::string ord_gen, ord_input, ord_x = "0";
    i64 ord_prec = 12;
    bool ord_as_json = false;
    ord->add_option("name", ord_gen, "generator name (or use --input)");
    ord->add_option("--input", ord_input, "JSON expansion file");
    ord->add_option("--x", ord_x, "rational torsion point a/t")->required();
    ord->add_option("--prec", ord_prec, "generator precision")->default_val(12);
    ord->add_flag("--json", ord_as_json, "JSON output");
    ord->callback([&] {
        FourierExpansion f = load_series(ord_gen, ord_input, ord_prec);
        OrdResult o = ord_at(f, parse_rational(ord_x));
        if (ord_as_json) {
            emit_json(ord_json(o, f.rank()));
        } else if (o.finite) {
            std::cout << rational_str(o.value) << "  (witness q-exponent "
                      << render_exponent(o.witness.nq, f.den_q()) << ", elliptic "
                      << render_exponent(o.witness.r[0], f.den_z()) << ")\n";
        } else {
            std::cout << ">= " << rational_str(o.value) << " (no stored term attains it)\n";
        }
    });

    // xi
    auto* xi = app.add_subcommand("xi", "development coefficient xi_nu and its modularity");
    std::string xi_gen, xi_input;
    i64 xi_nu = 0, xi_prec = 12;
    bool xi_json = false, xi_emit = false;
    xi->add_option("name", xi_gen, "generator name (or use --input)");
    xi->add_option("--input", xi_input, "JSON expansion file");
    xi->add_option("--nu", xi_nu, "development order")->required();
    xi->add_option("--prec", xi_prec, "generator precision")->default_val(12);
    xi->add_flag("--json", xi_json, "JSON output");
    xi->add_flag("--emit-series", xi_emit, "include the series in the JSON output");
    xi->callback([&] {
        FourierExpansion f = load_series(xi_gen, xi_input, xi_prec);
        XiSeries xs = xi_hat(f, xi_nu);
        ModularityCheck mc = is_modular_form(xs);
        if (xi_json) {
            Json j;
            j["nu"] = xs.nu;
            j["claimed_weight"] = xs.claimed_weight;
            j["modular"] = mc.modular;
            Json coords = Json::array();
            for (const auto& c : mc.coords) coords.push_back(rational_str(c));
            j["coords"] = coords;
            if (xi_emit) j["series"] = expansion_json(xs.series);
            emit_json(j);
        } else {
            std::cout << "xi_" << xs.nu << ": weight " << xs.claimed_weight << ", "
                      << (mc.modular ? "modular" : "NOT modular");
            if (mc.modular && !mc.coords.empty()) {
                std::cout << ", coords";
                for (const auto& c : mc.coords) std::cout << " " << rational_str(c);
            }
            std::cout << "\n";
        }
    });

    // bound
    auto* bound = app.add_subcommand("bound", "closed-form bound evaluators");
    std::string bound_theorem, bound_lat = "1", bound_c1 = "1/24", bound_c2 = "13";
    i64 bk = 0, bm = 1, bidx = 1, bd = 1;
    bool bound_json = false;
    bound->add_option("theorem", bound_theorem, "refined|general|lattice|slope|aip")
        ->required()
        ->check(CLI::IsMember({"refined", "general", "lattice", "slope", "aip"}));
    bound->add_option("--weight,-k", bk, "modular weight");
    bound->add_option("--index,-m", bm, "index")->default_val(1);
    bound->add_option("--multiplier", bidx, "subgroup index [SL2(Z):Gamma]")->default_val(1);
    bound->add_option("--lattice", bound_lat, "scalings d1[,d2]")->default_val("1");
    bound->add_option("--scaling", bd, "A1 scaling d (aip)")->default_val(1);
    bound->add_option("--c1", bound_c1, "rational C1 (general)")->default_val("1/24");
    bound->add_option("--c2", bound_c2, "rational C2 (general)")->default_val("13");
    bound->add_flag("--json", bound_json, "JSON output");
    bound->callback([&] {
        BoundReport rep;
        if (bound_theorem == "refined") {
            rep = bound_refined(bk, bm, bidx);
        } else if (bound_theorem == "general") {
            rep = bound_general(bk, bm, bidx, parse_rational(bound_c1),
                                parse_rational(bound_c2));
        } else if (bound_theorem == "lattice") {
            rep = bound_lattice(bk, bm, parse_lattice(bound_lat), bidx);
        } else if (bound_theorem == "slope") {
            rep = slope_bound(parse_lattice(bound_lat));
        } else {
            rep = aip_threshold_report(bk, bd);
        }
        if (bound_json) {
            emit_json(bound_report_json(rep));
        } else if (!rep.applicable) {
            std::cout << "inapplicable: " << rep.reason << "\n";
            exit_code = 1;
        } else if (rep.exact_value) {
            std::cout << rational_str(*rep.exact_value) << "\n";
        } else {
            std::cout << rep.value->str(20) << "\n";
        }
    });

    // certify
    auto* certify = app.add_subcommand("certify", "exact vanishing certificate for J_{k,m}[q^N]");
    i64 ck = 0, cm = 0, cn = 0;
    i64 cmax_t = -1;
    bool cert_json = false;
    certify->add_option("--weight,-k", ck, "weight")->required();
    certify->add_option("--index,-m", cm, "index")->required();
    certify->add_option("--min-ord,-N", cn, "vanishing order to certify")->required();
    certify->add_option("--max-t", cmax_t, "largest torsion level to scan")->default_val(-1);
    certify->add_flag("--json", cert_json, "JSON output");
    certify->callback([&] {
        std::optional<i64> max_t;
        if (cmax_t >= 1) max_t = cmax_t;
        auto c = certify_vanishing(ck, cm, cn, max_t);
        if (!c) {
            std::cout << "inconclusive\n";
            exit_code = 1;
            return;
        }
        if (cert_json) {
            emit_json(certificate_json(*c));
        } else {
            std::cout << "certified J_{" << ck << "," << cm << "}[q^" << cn
                      << "] = 0: " << c->entries.size() << " torsion level(s), total "
                      << rational_str(c->total) << " > " << c->target;
            if (c->squared) std::cout << " (via the squared form)";
            std::cout << "\n";
        }
    });

    // verify-cert
    auto* vcert = app.add_subcommand("verify-cert", "re-check a vanishing certificate");
    std::string vcert_path;
    vcert->add_option("file", vcert_path, "certificate JSON file")->required();
    vcert->callback([&] {
        std::ifstream in(vcert_path);
        if (!in) throw DomainError("certificate file not readable: " + vcert_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw StructureError(std::string("certificate is not valid JSON: ") + e.what());
        }
        bool ok = verify_certificate(certificate_from_json(j));
        std::cout << (ok ? "valid" : "invalid") << "\n";
        if (!ok) exit_code = 1;
    });

    // ffj
    auto* ffj = app.add_subcommand("ffj", "symmetric formal Fourier-Jacobi truncation");
    i64 fk = 0, fd = 1, fM = 0, fprec = -1;
    bool ffj_emit = false, ffj_json = false;
    ffj->add_option("--weight,-k", fk, "weight")->required();
    ffj->add_option("--scaling,-d", fd, "A1 scaling")->default_val(1);
    ffj->add_option("--order,-M", fM, "truncation order")->required();
    ffj->add_option("--prec", fprec, "q-precision (-1 = order + 1)")->default_val(-1);
    ffj->add_flag("--emit-basis", ffj_emit, "include solved elements in the output");
    ffj->add_flag("--json", ffj_json, "JSON output");
    ffj->callback([&] {
        FFJTruncation tr = build_truncated_space(fk, fd, fM, fprec);
        i64 ceiling = dim_upper_FM(fk, fd);
        Json per = Json::array();
        for (const auto& b : tr.per_order) per.push_back(b.dim());
        std::map<i64, i64> hist_map;
        for (const auto& psi : tr.elements) ++hist_map[leading_order(tr, psi).ord];
        Json hist = Json::object();
        for (auto [o, c] : hist_map) hist[std::to_string(o)] = c;
        if (ffj_json) {
            Json j;
            j["weight"] = fk;
            j["scaling"] = fd;
            j["order"] = fM;
            j["solved_dim"] = tr.solved_dim;
            j["per_order_dims"] = per;
            j["ord_histogram"] = hist;
            j["ceiling"] = ceiling;
            if (ffj_emit) {
                Json els = Json::array();
                for (const auto& psi : tr.elements) {
                    Json tuple = Json::array();
                    for (const auto& f : psi) tuple.push_back(expansion_json(f));
                    els.push_back(tuple);
                }
                j["elements"] = els;
            }
            emit_json(j);
        } else {
            std::cout << "solved_dim " << tr.solved_dim << " (ceiling " << ceiling
                      << "), per-order dims:";
            for (const auto& b : tr.per_order) std::cout << " " << b.dim();
            std::cout << ", ord histogram:";
            for (auto& [o, c] : hist.items()) std::cout << " " << o << ":" << c.get<i64>();
            std::cout << "\n";
        }
    });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid sweep over (k, m, N) cells");
    std::string sweep_grid, sweep_out, sweep_manifest, sweep_format = "csv";
    sweep->add_option("--grid", sweep_grid, "grid JSON file")->required();
    sweep->add_option("--out", sweep_out, "output file (default stdout)");
    sweep->add_option("--manifest", sweep_manifest, "resumable manifest path");
    sweep->add_option("--format", sweep_format, "csv|json")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--threads", threads_flag, "worker threads");
    sweep->callback([&] {
        Config cfg = resolve_config(config_path, cache_dir_flag, threads_flag);
        std::string manifest = sweep_manifest;
        if (manifest.empty() && !cfg.cache_dir.empty())
            manifest = cfg.cache_dir + "/sweep-manifest.json";
        exit_code = run_sweep(sweep_grid, sweep_out, manifest, sweep_format, cfg.threads,
                              cmdline.str());
    });

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
    std::string st_filter;
    bool st_list = false;
    selftest->add_option("--filter", st_filter, "substring filter on check names");
    selftest->add_flag("--list", st_list, "list check names without running");
    selftest->callback([&] {
        const auto& checks = acceptance_checks();
        bool all = true;
        i64 ran = 0;
        for (const auto& c : checks) {
            if (!st_filter.empty() && c.name.find(st_filter) == std::string::npos) continue;
            if (st_list) {
                std::cout << c.name << "\n";
                continue;
            }
            CheckResult r = run_check(c);
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << c.name << ": " << r.detail << "\n";
            all = all && r.pass;
            ++ran;
        }
        if (!st_list && ran == 0 && !st_filter.empty()) {
            std::cout << "no checks match filter '" << st_filter << "'\n";
            exit_code = 1;
        } else if (!all) {
            exit_code = 1;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
