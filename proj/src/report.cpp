#include "primediv/report.hpp"

#include <cmath>
#include <iomanip>

#include "primediv/errors.hpp"

namespace primediv::report {

json to_json(const ExactRational& x) { return x.str(true); }

json to_json(const ApproxReal& x) { return {{"decimal", x.to_double()}, {"abs_error", x.error_double()}}; }

json to_json(const DensityResult& d) {
    json j = to_json(d.decimal);
    if (d.coefficient) j["fraction"] = to_json(*d.coefficient);
    j["formula_id"] = d.formula_id;
    return j;
}

json to_json(const AlgebraicNumber& x) {
    json j{{"value", x.str()}, {"D", x.D().get_str()}, {"norm", to_json(x.norm())}};
    j["basis"] = x.basis_mode() == BasisMode::HalfIntegerBasis ? "half_integer" : "sqrt";
    j["u"] = to_json(x.u());
    j["v"] = to_json(x.v());
    return j;
}

json to_json(const PrimeCheck& c) {
    json j{{"p", c.p},
           {"case", to_string(c.kind)},
           {"divides", c.divides},
           {"method", c.method == CheckMethod::Orders ? "orders" : "oracle"}};
    j["ord_r"] = c.ord_r ? json(*c.ord_r) : json(nullptr);
    j["ord_q"] = c.ord_q ? json(*c.ord_q) : json(nullptr);
    return j;
}

json to_json(const SieveSummary& s) {
    return {{"limit", s.limit},
            {"prime_count", s.prime_count},
            {"divisor_count", s.divisor_count},
            {"split_divisors", s.split_divisors},
            {"inert_divisors", s.inert_divisors},
            {"ramified_divisors", s.ramified_divisors},
            {"bad_divisors", s.bad_divisors},
            {"split_primes", s.split_primes},
            {"inert_primes", s.inert_primes},
            {"empirical_fractions",
             {{"split", to_json(s.empirical_fraction(PrimeCase::Split))},
              {"inert", to_json(s.empirical_fraction(PrimeCase::Inert))},
              {"total", to_json(s.empirical_total())}}}};
}

json to_json(const ComparisonReport& r) {
    json rows = json::array();
    for (auto& row : r.rows) {
        json j{{"case", row.label},
               {"divisors", row.divisors},
               {"empirical", to_json(row.empirical)},
               {"empirical_decimal", row.empirical_decimal}};
        j["predicted"] = row.predicted ? to_json(*row.predicted) : json(nullptr);
        j["gap"] = row.gap ? json(*row.gap) : json(nullptr);
        rows.push_back(std::move(j));
    }
    return {{"limit", r.limit}, {"prime_count", r.prime_count}, {"rows", rows}};
}

json envelope(const std::string& command, const Recurrence* rec, json meta_extra, json results) {
    json meta{{"command", command}};
    if (rec) meta["recurrence"] = {rec->a1(), rec->a0(), rec->x0(), rec->x1()};
    if (meta_extra.is_object())
        for (auto& [k, v] : meta_extra.items()) meta[k] = v;
    return {{"meta", meta}, {"results", results}};
}

json classification_json(const Recurrence& rec) {
    Classification c = classify(rec);
    QuadraticContext ctx = rec.context();
    json j{{"kind", to_string(c.kind)},
           {"quotient_kind", to_string(c.quotient_kind)},
           {"disc_poly", ctx.disc_poly.get_str()},
           {"D", ctx.D.get_str()},
           {"initial_norm", rec.initial_norm().get_str()}};
    if (c.kind != ClassificationKind::Inseparable) j["r"] = to_json(root_quotient(rec));
    if (c.supports_membership() || c.kind == ClassificationKind::DegenerateRootOfUnity) {
        if (rec.initial_norm() != 0) j["q"] = to_json(initial_quotient(rec));
    }
    if (c.torsion_relation)
        j["torsion_relation"] = {{"m", c.torsion_relation->first}, {"n", c.torsion_relation->second}};
    return j;
}

void write_summary_text(std::ostream& os, const SieveSummary& s) {
    os << "limit              " << s.limit << '\n'
       << "primes             " << s.prime_count << '\n'
       << "divisors           " << s.divisor_count << "  (" << std::fixed << std::setprecision(6)
       << s.empirical_total().to_double() << ")\n"
       << "  split            " << s.split_divisors << " of " << s.split_primes << '\n'
       << "  inert            " << s.inert_divisors << " of " << s.inert_primes << '\n'
       << "  ramified         " << s.ramified_divisors << '\n'
       << "  bad              " << s.bad_divisors << '\n';
    os.unsetf(std::ios::floatfield);
}

void write_comparison_text(std::ostream& os, const ComparisonReport& r) {
    os << "limit " << r.limit << ", " << r.prime_count << " primes\n";
    os << std::left << std::setw(8) << "case" << std::setw(10) << "divisors" << std::setw(12) << "empirical"
       << std::setw(14) << "predicted" << "gap\n";
    for (auto& row : r.rows) {
        os << std::setw(8) << row.label << std::setw(10) << row.divisors << std::setw(12) << std::fixed
           << std::setprecision(6) << row.empirical_decimal;
        if (row.predicted) {
            os << std::setw(14) << std::setprecision(9) << row.predicted->to_double() << std::setprecision(6)
               << *row.gap;
        } else {
            os << std::setw(14) << "-" << "-";
        }
        os << '\n';
    }
    os.unsetf(std::ios::floatfield);
    os << std::right;
}

void write_comparison_csv(std::ostream& os, const ComparisonReport& r) {
    os << "case,divisors,primes,empirical,predicted,abs_error,gap\n";
    os << std::setprecision(17);
    for (auto& row : r.rows) {
        os << row.label << ',' << row.divisors << ',' << r.prime_count << ',' << row.empirical_decimal << ',';
        if (row.predicted) os << row.predicted->to_double() << ',' << row.predicted->error_double() << ',' << *row.gap;
        else os << ",,";
        os << '\n';
    }
}

void write_density_text(std::ostream& os, const DensityResult& d, const std::string& name) {
    os << std::left << std::setw(20) << name << std::right;
    if (d.coefficient) os << std::setw(18) << d.coefficient->str() << " * S  ";
    else os << std::setw(24) << "";
    os << "= " << d.decimal.str(13) << "  +- " << std::scientific << std::setprecision(2) << d.decimal.error_double()
       << '\n';
    os.unsetf(std::ios::floatfield);
    os << std::setprecision(6);
}

}  // namespace primediv::report
