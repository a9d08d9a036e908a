#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <thread>

#include "lucasindex/density.hpp"
#include "lucasindex/empirical.hpp"

namespace py = pybind11;
using namespace lucasindex;

namespace {

py::dict decompose_dict(const DensityProfile& prof) {
    const auto& dec = prof.decomposition();
    py::dict g0;
    g0["x"] = rat_str(dec.gamma0.x());
    g0["y"] = rat_str(dec.gamma0.y());
    g0["d"] = dec.gamma0.field().d;
    py::list chi;
    for (const auto& [m, c] : prof.chi().terms)
        chi.append(py::make_tuple(m, rat_str(c)));
    py::dict out;
    out["a1"] = prof.params().a1;
    out["a2"] = prof.params().a2;
    out["D"] = prof.params().D;
    out["disc"] = prof.params().discK;
    out["s"] = dec.sign;
    out["h"] = dec.h;
    out["gamma0"] = g0;
    out["chi_period"] = prof.chi().period;
    out["chi"] = chi;
    return out;
}

DensityProfile build_profile(long long a1, long long a2) {
    return DensityProfile::build(LucasParams::analyze(a1, a2));
}

} // namespace

PYBIND11_MODULE(_lucasindex, m) {
    m.doc() = "density of the index of appearance in Lucas sequences";

    py::register_exception<ValidationError>(m, "SequenceValidationError");
    py::register_exception<ExcludedPrimeError>(m, "ExcludedPrimeErrorPy");

    m.def("artin_constant", &artin_constant, "the Artin constant");

    m.def(
        "decompose",
        [](long long a1, long long a2) {
            return decompose_dict(build_profile(a1, a2));
        },
        py::arg("a1"), py::arg("a2"),
        "sign/exponent/base decomposition of the root ratio plus chi terms");

    m.def(
        "gu_table",
        [](long long a1, long long a2) {
            auto prof = build_profile(a1, a2);
            py::dict values;
            for (uint64_t r = 0; r < prof.gu_period(); ++r)
                values[py::int_(r)] = rat_str(prof.gu_table()[r]);
            py::dict out;
            out["period"] = prof.gu_period();
            out["values"] = values;
            return out;
        },
        py::arg("a1"), py::arg("a2"),
        "minimal-period table of G_u as exact rational strings");

    m.def(
        "delta",
        [](long long a1, long long a2, uint64_t t) {
            auto dv = build_profile(a1, a2).delta(t);
            return py::make_tuple(dv.value, rat_str(dv.coeff));
        },
        py::arg("a1"), py::arg("a2"), py::arg("t"),
        "closed-form density at t: (float value, exact coefficient of A)");

    m.def(
        "delta_table",
        [](long long a1, long long a2, uint64_t t_max) {
            auto prof = build_profile(a1, a2);
            std::vector<double> out;
            for (uint64_t t = 1; t <= t_max; ++t)
                out.push_back(prof.delta(t).value);
            return out;
        },
        py::arg("a1"), py::arg("a2"), py::arg("t_max"));

    m.def(
        "delta_series",
        [](long long a1, long long a2, uint64_t t, uint64_t terms) {
            auto prm = LucasParams::analyze(a1, a2);
            prm.validate();
            auto ctx =
                ConditionContext::build(gamma_decompose(prm.gamma()), prm.field());
            auto sv = delta_series(t, terms, ctx);
            return py::make_tuple(sv.value, sv.remainder_bound);
        },
        py::arg("a1"), py::arg("a2"), py::arg("t"), py::arg("terms") = 1000,
        "truncated-series value and its remainder bound");

    m.def(
        "rank_of_appearance",
        [](long long a1, long long a2, uint64_t p) {
            auto prm = LucasParams::analyze(a1, a2);
            prm.validate();
            SpfTable table(p + 2);
            return rank_of_appearance(p, prm, table);
        },
        py::arg("a1"), py::arg("a2"), py::arg("p"));

    m.def(
        "index_of_appearance",
        [](long long a1, long long a2, uint64_t p) {
            auto prm = LucasParams::analyze(a1, a2);
            prm.validate();
            SpfTable table(p + 2);
            return index_of_appearance(p, prm, table);
        },
        py::arg("a1"), py::arg("a2"), py::arg("p"));

    m.def(
        "scan",
        [](long long a1, long long a2, uint64_t n_primes, unsigned workers) {
            auto prm = LucasParams::analyze(a1, a2);
            prm.validate();
            SpfTable table(nth_prime_upper_bound(n_primes) + 2);
            auto emp = scan(prm, n_primes, workers, table);
            py::dict counts;
            for (auto [t, c] : emp.counts) counts[py::int_(t)] = c;
            py::dict out;
            out["prime_count"] = emp.prime_count;
            out["x"] = emp.x;
            out["counts"] = counts;
            out["skipped"] = emp.skipped;
            return out;
        },
        py::arg("a1"), py::arg("a2"), py::arg("n_primes"),
        py::arg("workers") = std::thread::hardware_concurrency(),
        "tally of the index of appearance over the first n primes");

    m.def(
        "compare",
        [](long long a1, long long a2, uint64_t t_max, uint64_t n_primes,
           unsigned workers) {
            auto prm = LucasParams::analyze(a1, a2);
            auto prof = DensityProfile::build(prm);
            SpfTable table(nth_prime_upper_bound(n_primes) + 2);
            auto emp = scan(prm, n_primes, workers, table);
            py::list rows;
            for (const auto& r : compare(prof, emp, t_max)) {
                py::dict row;
                row["t"] = r.t;
                row["delta"] = r.delta;
                row["delta_tilde"] = r.delta_tilde;
                row["coeff"] = rat_str(r.coeff);
                row["error_pct"] =
                    r.error_pct ? py::object(py::float_(*r.error_pct))
                                : py::object(py::none());
                row["flagged"] = r.flagged;
                rows.append(row);
            }
            return rows;
        },
        py::arg("a1"), py::arg("a2"), py::arg("t_max") = 40,
        py::arg("n_primes") = 100000,
        py::arg("workers") = std::thread::hardware_concurrency());
}
