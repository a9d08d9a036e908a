#include "lucasindex/io.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace lucasindex {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ContractViolation("unknown format: " + name);
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

namespace {

json chi_json(const ChiDecomposition& chi) {
    json terms = json::array();
    for (const auto& [m, c] : chi.terms)
        terms.push_back({{"m", m}, {"c", rat_str(c)}});
    return {{"period", chi.period}, {"terms", terms}};
}

json params_json(const LucasParams& p) {
    return {{"a1", p.a1}, {"a2", p.a2}, {"D", p.D}, {"disc", p.discK}};
}

} // namespace

std::string decompose_text(const DensityProfile& p) {
    const auto& dec = p.decomposition();
    std::ostringstream os;
    os << "a1 = " << p.params().a1 << ", a2 = " << p.params().a2
       << ", D = " << p.params().D << ", disc K = " << p.params().discK << "\n";
    os << "gamma  = " << (dec.sign < 0 ? "-" : "") << "gamma0^" << dec.h
       << "  (s = " << dec.sign << ", h = " << dec.h << ")\n";
    os << "gamma0 = " << dec.gamma0.str() << "\n";
    os << "chi period P = " << p.chi().period << "\n";
    os << "chi terms:";
    for (const auto& [m, c] : p.chi().terms)
        os << "  (" << m << ", " << rat_str(c) << ")";
    os << "\n";
    return os.str();
}

std::string decompose_csv(const DensityProfile& p) {
    std::ostringstream os;
    os << "m,c\n";
    for (const auto& [m, c] : p.chi().terms)
        os << m << "," << rat_str(c) << "\n";
    return os.str();
}

std::string decompose_json(const DensityProfile& p) {
    const auto& dec = p.decomposition();
    json j = {{"params", params_json(p.params())},
              {"s", dec.sign},
              {"h", dec.h},
              {"gamma0", {{"x", rat_str(dec.gamma0.x())},
                          {"y", rat_str(dec.gamma0.y())},
                          {"d", dec.gamma0.field().d}}},
              {"chi", chi_json(p.chi())}};
    return j.dump(2) + "\n";
}

std::string gtable_text(const DensityProfile& p) {
    const uint64_t P = p.gu_period();
    std::map<std::string, std::vector<uint64_t>> classes; // value -> residues
    std::vector<std::string> order;
    for (uint64_t r = 0; r < P; ++r) {
        std::string v = rat_str(p.gu_table()[r]);
        if (!classes.count(v)) order.push_back(v);
        classes[v].push_back(r);
    }
    std::ostringstream os;
    os << "G_u has period " << P << ":\n";
    for (const auto& v : order) {
        os << "  " << v << "  if t = ";
        const auto& rs = classes[v];
        for (size_t i = 0; i < rs.size(); ++i)
            os << (i ? ", " : "") << rs[i];
        os << " (mod " << P << ")\n";
    }
    return os.str();
}

std::string gtable_csv(const DensityProfile& p) {
    std::ostringstream os;
    os << "t_mod_" << p.gu_period() << ",G_u\n";
    for (uint64_t r = 0; r < p.gu_period(); ++r)
        os << r << "," << rat_str(p.gu_table()[r]) << "\n";
    return os.str();
}

std::string gtable_json(const DensityProfile& p) {
    json values = json::object();
    for (uint64_t r = 0; r < p.gu_period(); ++r)
        values[std::to_string(r)] = rat_str(p.gu_table()[r]);
    json j = {{"params", params_json(p.params())},
              {"period", p.gu_period()},
              {"values", values}};
    return j.dump(2) + "\n";
}

std::string conditions_csv(const ConditionContext& ctx, uint64_t n_max) {
    std::ostringstream os;
    os << "n,case,cn,ratio\n";
    for (const auto& row : condition_table(ctx, n_max))
        os << row.n << "," << cond_case_name(row.c) << "," << row.cn << ","
           << rat_str(row.ratio) << "\n";
    return os.str();
}

std::string density_text(const DensityProfile& p, uint64_t t_max) {
    std::ostringstream os;
    os << "  t     delta      coeff (delta = coeff * A)\n";
    for (uint64_t t = 1; t <= t_max; ++t) {
        DeltaValue dv = p.delta(t);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%3llu  %s   ", (unsigned long long)t,
                      format_fixed(dv.value, 6).c_str());
        os << buf << rat_str(dv.coeff) << "\n";
    }
    return os.str();
}

std::string density_csv(const DensityProfile& p, uint64_t t_max) {
    std::ostringstream os;
    os << "t,delta,coeff\n";
    for (uint64_t t = 1; t <= t_max; ++t) {
        DeltaValue dv = p.delta(t);
        os << t << "," << format_fixed(dv.value, 6) << "," << rat_str(dv.coeff)
           << "\n";
    }
    return os.str();
}

std::string density_json(const DensityProfile& p, uint64_t t_max) {
    json rows = json::array();
    for (uint64_t t = 1; t <= t_max; ++t) {
        DeltaValue dv = p.delta(t);
        rows.push_back({{"t", t},
                        {"delta", format_fixed(dv.value, 6)},
                        {"coeff", rat_str(dv.coeff)}});
    }
    json j = {{"params", params_json(p.params())}, {"rows", rows}};
    return j.dump(2) + "\n";
}

std::string empirical_text(const EmpiricalTable& table) {
    std::ostringstream os;
    os << "primes scanned: " << table.prime_count << " (up to " << table.x
       << "), skipped:";
    for (uint64_t p : table.skipped) os << " " << p;
    os << "\n   t      count   density\n";
    for (const auto& [t, c] : table.counts) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%4llu  %9llu  %s\n",
                      (unsigned long long)t, (unsigned long long)c,
                      format_fixed(double(c) / double(table.prime_count), 6).c_str());
        os << buf;
    }
    return os.str();
}

std::string empirical_csv(const EmpiricalTable& table) {
    std::ostringstream os;
    os << "t,count,density\n";
    for (const auto& [t, c] : table.counts)
        os << t << "," << c << ","
           << format_fixed(double(c) / double(table.prime_count), 6) << "\n";
    return os.str();
}

std::string empirical_json(const EmpiricalTable& table) {
    json counts = json::object();
    for (const auto& [t, c] : table.counts) counts[std::to_string(t)] = c;
    json j = {{"params", params_json(table.params)},
              {"prime_count", table.prime_count},
              {"x", table.x},
              {"skipped", table.skipped},
              {"counts", counts}};
    return j.dump(2) + "\n";
}

namespace {

std::string compare_cells(const CompareRow& r) {
    std::string err = r.flagged ? std::string("   --   ")
                                : format_fixed(*r.error_pct, 3) + "%";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%4llu  %s  %s  %8s",
                  (unsigned long long)r.t, format_fixed(r.delta, 6).c_str(),
                  format_fixed(r.delta_tilde, 6).c_str(), err.c_str());
    return buf;
}

} // namespace

std::string compare_text(const std::vector<CompareRow>& rows,
                         const EmpiricalTable& table) {
    std::ostringstream os;
    os << "primes scanned: " << table.prime_count << " (up to " << table.x
       << "), skipped:";
    for (uint64_t p : table.skipped) os << " " << p;
    os << "\n";
    const char* head = "   t  delta     delta~    error   ";
    size_t half = (rows.size() + 1) / 2;
    if (rows.size() >= 4 && rows.size() % 2 == 0) {
        os << head << " | " << head << "\n";
        for (size_t i = 0; i < half; ++i)
            os << compare_cells(rows[i]) << " | " << compare_cells(rows[half + i])
               << "\n";
    } else {
        os << head << "\n";
        for (const auto& r : rows) os << compare_cells(r) << "\n";
    }
    return os.str();
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::ostringstream os;
    os << "t,delta,delta_tilde,error_pct\n";
    for (const auto& r : rows) {
        os << r.t << "," << format_fixed(r.delta, 6) << ","
           << format_fixed(r.delta_tilde, 6) << ",";
        if (r.flagged) os << "";
        else os << format_fixed(*r.error_pct, 3);
        os << "\n";
    }
    return os.str();
}

std::string compare_json(const std::vector<CompareRow>& rows,
                         const EmpiricalTable& table) {
    json jrows = json::array();
    for (const auto& r : rows) {
        json row = {{"t", r.t},
                    {"delta", format_fixed(r.delta, 6)},
                    {"delta_tilde", format_fixed(r.delta_tilde, 6)},
                    {"coeff", rat_str(r.coeff)},
                    {"flagged", r.flagged}};
        if (r.error_pct) row["error_pct"] = format_fixed(*r.error_pct, 3);
        else row["error_pct"] = nullptr;
        jrows.push_back(row);
    }
    json j = {{"params", params_json(table.params)},
              {"prime_count", table.prime_count},
              {"x", table.x},
              {"skipped", table.skipped},
              {"rows", jrows}};
    return j.dump(2) + "\n";
}

} // namespace lucasindex
