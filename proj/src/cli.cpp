#include "primediv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "primediv/errors.hpp"
#include "primediv/euler.hpp"
#include "primediv/modular.hpp"
#include "primediv/report.hpp"

namespace primediv::cli {

namespace {

using report::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string rec_text = "1,1,3,1";
    std::uint64_t limit = 1'000'000;
    std::uint64_t euler_bound = kDefaultEulerBound;
    std::uint64_t i_max = 500, j_max = 500;
    std::uint64_t prime = 0;
    std::uint64_t base = 0;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "text";
    std::string out_path;
    bool records = false;
};

std::array<std::int64_t, 4> parse_rec(const std::string& text) {
    std::array<std::int64_t, 4> v{};
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) throw UsageError("--rec expects four integers a1,a0,x0,x1");
        try {
            std::size_t used = 0;
            v[n++] = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("--rec: not an integer: '" + item + "'");
        }
    }
    if (n != 4) throw UsageError("--rec expects four integers a1,a0,x0,x1");
    return v;
}

Recurrence make_recurrence(const std::array<std::int64_t, 4>& v) {
    if (v[1] == 0) throw DegenerateRecurrenceError("recurrence is FirstOrderReject (a0 = 0)");
    return Recurrence(v[0], v[1], v[2], v[3]);
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

void cmd_classify(const Config& cfg, std::ostream& os) {
    auto v = parse_rec(cfg.rec_text);
    json meta{{"recurrence", v}};
    json res;
    if (v[1] == 0) {
        res = {{"kind", to_string(ClassificationKind::FirstOrderReject)},
               {"quotient_kind", to_string(QuotientKind::Undefined)}};
    } else {
        res = report::classification_json(Recurrence(v[0], v[1], v[2], v[3]));
    }
    if (cfg.format == "json") {
        emit_json(os, report::envelope("classify", nullptr, meta, res));
        return;
    }
    const char* sep = cfg.format == "csv" ? "," : ": ";
    if (cfg.format == "csv") os << "key,value\n";
    for (auto& key : {"kind", "quotient_kind", "disc_poly", "D", "initial_norm"})
        if (res.contains(key)) os << key << sep << (res[key].is_string() ? res[key].get<std::string>() : res[key].dump()) << '\n';
    for (auto& key : {"q", "r"}) {
        if (!res.contains(key)) continue;
        const json& x = res[key];
        os << key << sep << x["value"].get<std::string>() << '\n';
        if (cfg.format == "text")
            os << "  basis " << x["basis"].get<std::string>() << ", u = " << x["u"].get<std::string>()
               << ", v = " << x["v"].get<std::string>() << ", norm " << x["norm"].get<std::string>() << '\n';
    }
    if (res.contains("torsion_relation"))
        os << "torsion_relation" << sep << "q^" << res["torsion_relation"]["m"] << " = r^"
           << res["torsion_relation"]["n"] << " * (root of unity)\n";
}

int cmd_check(const Config& cfg, std::ostream& os, std::ostream& err) {
    if (cfg.prime < 2 || !mod::is_prime(cfg.prime)) throw UsageError("--prime must be a prime");
    Recurrence rec = make_recurrence(parse_rec(cfg.rec_text));
    PreparedRecurrence prep = PreparedRecurrence::make(rec);
    PrimeCheck c = check_prime(prep, cfg.prime);
    bool oracle = period_oracle(rec, cfg.prime);
    bool agree = oracle == c.divides;
    if (cfg.format == "json") {
        json res = report::to_json(c);
        res["oracle"] = oracle;
        res["agree"] = agree;
        emit_json(os, report::envelope("check", &rec, json::object(), res));
    } else if (cfg.format == "csv") {
        std::vector<PrimeCheck> one{c};
        write_records_csv(os, one);
    } else {
        os << "p        " << c.p << '\n'
           << "case     " << to_string(c.kind) << '\n'
           << "method   " << (c.method == CheckMethod::Orders ? "orders" : "oracle") << '\n';
        if (c.ord_r) os << "ord_r    " << *c.ord_r << '\n' << "ord_q    " << *c.ord_q << '\n';
        os << "divides  " << (c.divides ? "true" : "false") << '\n'
           << "oracle   " << (oracle ? "true" : "false") << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    }
    if (!agree) {
        err << "error: order test and period oracle disagree at p = " << cfg.prime << '\n';
        return 2;
    }
    return 0;
}

void cmd_sieve(const Config& cfg, std::ostream& os) {
    if (cfg.limit < 2) throw UsageError("--limit must be at least 2");
    Recurrence rec = make_recurrence(parse_rec(cfg.rec_text));
    bool want_records = cfg.records || cfg.format == "csv";
    SieveRun run = run_sieve(rec, cfg.limit, cfg.jobs, want_records);
    if (cfg.format == "csv") {
        write_records_csv(os, run.records);
    } else if (cfg.format == "json") {
        json res = report::to_json(run.summary);
        if (cfg.records) {
            json recs = json::array();
            for (auto& r : run.records) recs.push_back(report::to_json(r));
            res["records"] = recs;
        }
        emit_json(os, report::envelope("sieve", &rec, {{"jobs", cfg.jobs}}, res));
    } else {
        report::write_summary_text(os, run.summary);
        if (cfg.records) write_records_csv(os, run.records);
    }
}

void cmd_density(const Config& cfg, std::ostream& os) {
    if (cfg.euler_bound < 100) throw UsageError("--euler-bound must be at least 100");
    const std::uint64_t b = cfg.euler_bound;
    DensityResult s{ExactRational(1), euler_S(b), "euler_S"};
    std::vector<std::pair<std::string, DensityResult>> rows{
        {"S", s},
        {"delta_split", delta_split_closed(b)},
        {"delta_inert", delta_inert_closed(b)},
        {"delta_inert_3mod4", delta_inert_three_mod_four(b)},
        {"delta_inert_1mod4", delta_inert_one_mod_four(b)},
        {"delta_total", delta_total(b)},
        {"split_sum_truncated", {std::nullopt, truncated_split_sum(cfg.i_max, cfg.j_max), "truncated_split_sum"}},
    };
    if (cfg.format == "json") {
        json res = json::object();
        for (auto& [name, d] : rows) res[name] = report::to_json(d);
        json meta{{"euler_bound", b}, {"i_max", cfg.i_max}, {"j_max", cfg.j_max}};
        emit_json(os, report::envelope("density", nullptr, meta, res));
    } else if (cfg.format == "csv") {
        os << "name,fraction,decimal,abs_error\n" << std::setprecision(17);
        for (auto& [name, d] : rows)
            os << name << ',' << (d.coefficient ? d.coefficient->str() : "") << ',' << d.decimal.to_double() << ','
               << d.decimal.error_double() << '\n';
    } else {
        for (auto& [name, d] : rows) report::write_density_text(os, d, name);
    }
}

void cmd_compare(const Config& cfg, std::ostream& os) {
    if (cfg.limit < 2) throw UsageError("--limit must be at least 2");
    if (cfg.euler_bound < 100) throw UsageError("--euler-bound must be at least 100");
    Recurrence rec = make_recurrence(parse_rec(cfg.rec_text));
    SieveRun run = run_sieve(rec, cfg.limit, cfg.jobs, false);
    ComparisonReport rep = compare(run.summary, predictions_for(rec, cfg.euler_bound));
    if (cfg.format == "json") {
        json meta{{"jobs", cfg.jobs}, {"euler_bound", cfg.euler_bound}};
        emit_json(os, report::envelope("compare", &rec, meta, report::to_json(rep)));
    } else if (cfg.format == "csv") {
        report::write_comparison_csv(os, rep);
    } else {
        report::write_comparison_text(os, rep);
    }
}

void cmd_artin(const Config& cfg, std::ostream& os) {
    if (cfg.base < 2 || moebius(cfg.base) == 0) throw UsageError("--base must be a squarefree integer >= 2");
    if (cfg.euler_bound < 100) throw UsageError("--euler-bound must be at least 100");
    ApproxReal additive = artin_additive(cfg.base, cfg.j_max);
    ExactRational corr = artin_correction(cfg.base);
    ApproxReal product = artin_product(corr, cfg.euler_bound);
    double gap = std::abs(additive.to_double() - product.to_double());
    double combined = additive.error_double() + product.error_double();
    if (cfg.format == "json") {
        json res{{"additive", report::to_json(additive)},
                 {"correction", report::to_json(corr)},
                 {"product", report::to_json(product)},
                 {"gap", gap},
                 {"combined_error", combined}};
        json meta{{"base", cfg.base}, {"j_max", cfg.j_max}, {"euler_bound", cfg.euler_bound}};
        emit_json(os, report::envelope("artin", nullptr, meta, res));
    } else if (cfg.format == "csv") {
        os << "base,additive,additive_error,correction,product,product_error\n"
           << std::setprecision(17) << cfg.base << ',' << additive.to_double() << ',' << additive.error_double() << ','
           << corr.str() << ',' << product.to_double() << ',' << product.error_double() << '\n';
    } else {
        os << "base " << cfg.base << '\n'
           << "additive (j <= " << cfg.j_max << ")  " << additive.str(12) << "  +- " << std::scientific
           << std::setprecision(2) << additive.error_double() << '\n';
        os.unsetf(std::ios::floatfield);
        os << "product " << corr.str() << " * A  " << product.str(12) << "  +- " << std::scientific
           << std::setprecision(2) << product.error_double() << '\n'
           << "gap " << gap << "  combined error " << combined << '\n';
        os.unsetf(std::ios::floatfield);
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Which primes divide a binary recurrence, counted and predicted"};
    app.name("primediv");
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--rec", cfg.rec_text, "a1,a0,x0,x1 of x_{n+2} = a1 x_{n+1} + a0 x_n")->capture_default_str();
    app.add_option("--limit", cfg.limit, "sieve bound")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--euler-bound", cfg.euler_bound, "prime bound for Euler products")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--i-max", cfg.i_max, "truncation in i")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--j-max", cfg.j_max, "truncation in j")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--prime", cfg.prime, "prime for check")->check(CLI::PositiveNumber);
    app.add_option("--base", cfg.base, "base r for artin")->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "text, json or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "write output to this file");
    app.add_flag("--records", cfg.records, "emit per-prime records");

    auto* classify_cmd = app.add_subcommand("classify", "classification and exact quotients");
    auto* check_cmd = app.add_subcommand("check", "one prime: case, orders, oracle cross-check");
    auto* sieve_cmd = app.add_subcommand("sieve", "count prime divisors up to --limit");
    auto* density_cmd = app.add_subcommand("density", "exact and decimal densities");
    auto* compare_cmd = app.add_subcommand("compare", "sieve counts against predicted densities");
    auto* artin_cmd = app.add_subcommand("artin", "Artin density for --base");
    for (auto* sub : {classify_cmd, check_cmd, sieve_cmd, density_cmd, compare_cmd, artin_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &out;
    try {
        if (!cfg.out_path.empty()) {
            file = std::make_unique<std::ofstream>(cfg.out_path);
            if (!*file) throw UsageError("--out: cannot open " + cfg.out_path);
            os = file.get();
        }
        if (*check_cmd && cfg.prime == 0) throw UsageError("check requires --prime");
        if (*artin_cmd && cfg.base == 0) throw UsageError("artin requires --base");
        int code = 0;
        if (*classify_cmd) cmd_classify(cfg, *os);
        else if (*check_cmd) code = cmd_check(cfg, *os, err);
        else if (*sieve_cmd) cmd_sieve(cfg, *os);
        else if (*density_cmd) cmd_density(cfg, *os);
        else if (*compare_cmd) cmd_compare(cfg, *os);
        else if (*artin_cmd) cmd_artin(cfg, *os);
        os->flush();
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"primediv"};
    for (auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace primediv::cli
