#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>
#include <vector>

#include "fracineq/acceptance.hpp"
#include "fracineq/besov.hpp"
#include "fracineq/config.hpp"
#include "fracineq/error.hpp"
#include "fracineq/field_ops.hpp"
#include "fracineq/generators.hpp"
#include "fracineq/luxemburg.hpp"
#include "fracineq/maximal.hpp"
#include "fracineq/orlicz.hpp"
#include "fracineq/relations.hpp"
#include "fracineq/spectral.hpp"

namespace py = pybind11;
using namespace fracineq;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

DomainSpec domain_of(const Array& a, double period) {
  if (a.ndim() == 1) return DomainSpec(1, period, static_cast<std::size_t>(a.shape(0)));
  if (a.ndim() == 2 && a.shape(0) == a.shape(1)) return DomainSpec(2, period, static_cast<std::size_t>(a.shape(0)));
  throw InvalidArgument("expected a 1-D array or a square 2-D array");
}

SampledField to_field(const Array& a, double period) {
  const auto d = domain_of(a, period);
  return SampledField::from_real(d, std::span<const double>(a.data(), static_cast<std::size_t>(a.size())));
}

Array to_array(const SampledField& f) {
  const auto n = static_cast<py::ssize_t>(f.domain().points());
  const auto shape = f.domain().dimension() == 1 ? std::vector<py::ssize_t>{n} : std::vector<py::ssize_t>{n, n};
  Array out(shape);
  auto* p = out.mutable_data();
  for (std::size_t i = 0; i < f.size(); ++i) p[i] = f[i].real();
  return out;
}

VariableExponent exponent_of(const DomainSpec& d, const std::variant<double, Array>& p) {
  if (const auto* c = std::get_if<double>(&p)) return VariableExponent::constant(d, *c);
  const auto& a = std::get<Array>(p);
  if (static_cast<std::size_t>(a.size()) != d.size()) throw InvalidArgument("exponent array must match the field");
  return VariableExponent(d, std::vector<double>(a.data(), a.data() + a.size()));
}

SmoothProfile profile_of(const std::string& name, double order) {
  if (name == "heat") return SmoothProfile::heat();
  if (name == "heat_derivative") return SmoothProfile::heat_derivative(order);
  if (name == "littlewood_paley") return SmoothProfile::littlewood_paley();
  throw InvalidArgument("unknown profile '" + name + "'");
}

YoungFunction young_of(const std::string& kind, double p, double q, double knee) {
  YoungSpec y;
  y.kind = kind;
  y.p = p;
  y.q = q;
  y.knee = knee;
  return y.build();
}

py::dict report_dict(const InequalityReport& r) {
  py::dict d;
  d["case_id"] = r.case_id;
  d["theorem"] = r.theorem;
  d["n"] = r.params.n;
  d["s"] = r.params.s;
  d["s1"] = r.params.s1;
  d["beta"] = r.params.beta;
  d["theta"] = r.params.theta;
  d["p_desc"] = r.params.p_desc;
  d["c_fit"] = r.c_fit;
  d["c_fit_refined"] = r.c_fit_refined;
  d["refinement_ratio"] = r.refinement_ratio;
  d["skipped"] = r.skipped;
  d["pass"] = r.pass;
  d["inconclusive"] = r.inconclusive;
  d["error"] = r.error;
  py::dict extras;
  for (const auto& [k, v] : r.extras) extras[py::str(k)] = v;
  d["extras"] = extras;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional Sobolev-type inequality toolkit on the periodic cube";
  auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<GateError>(m, "GateError", invalid.ptr());

  m.def(
      "fractional_laplacian", [](const Array& f, double period, double s) {
        return to_array(fractional_laplacian(to_field(f, period), s));
      },
      py::arg("values"), py::arg("period"), py::arg("s"));
  m.def(
      "riesz_potential", [](const Array& f, double period, double s) {
        return to_array(riesz_potential(to_field(f, period), s));
      },
      py::arg("values"), py::arg("period"), py::arg("s"));
  m.def(
      "heat_convolve", [](const Array& f, double period, double t) {
        return to_array(heat_convolve(to_field(f, period), t));
      },
      py::arg("values"), py::arg("period"), py::arg("t"));
  m.def(
      "riemann_liouville_fraclap",
      [](const Array& f, double period, double s1, double s) {
        const auto field = to_field(f, period);
        return to_array(riemann_liouville_fraclap(field, s1, s, 0,
                                                  LogGridSpec::riemann_liouville_default(field.domain())));
      },
      py::arg("values"), py::arg("period"), py::arg("s1"), py::arg("s"));
  m.def(
      "hl_maximal", [](const Array& f, double period) { return to_array(hl_maximal(to_field(f, period))); },
      py::arg("values"), py::arg("period"));
  m.def(
      "phi_maximal",
      [](const Array& f, double period, const std::string& profile, double order) {
        const auto field = to_field(f, period);
        return to_array(phi_maximal(field, profile_of(profile, order), default_phi_grid(field.domain())));
      },
      py::arg("values"), py::arg("period"), py::arg("profile") = "heat", py::arg("order") = 0.0);
  m.def(
      "weak_lorentz_norm", [](const Array& f, double period, double r) {
        return weak_lorentz_norm(to_field(f, period), r);
      },
      py::arg("values"), py::arg("period"), py::arg("r"));
  m.def(
      "lp_norm", [](const Array& f, double period, double p) { return lp_norm(to_field(f, period), p); },
      py::arg("values"), py::arg("period"), py::arg("p"));
  m.def(
      "luxemburg_norm",
      [](const Array& f, double period, const std::variant<double, Array>& p) {
        const auto field = to_field(f, period);
        return luxemburg_norm(field, exponent_of(field.domain(), p));
      },
      py::arg("values"), py::arg("period"), py::arg("p"));
  m.def(
      "orlicz_norm",
      [](const Array& f, double period, const std::string& kind, double p, double q, double knee, double sigma) {
        const auto a = young_of(kind, p, q, knee);
        const auto field = to_field(f, period);
        return sigma == 1.0 ? orlicz_luxemburg_norm(field, a) : rescaled_orlicz_norm(field, a, sigma);
      },
      py::arg("values"), py::arg("period"), py::arg("kind") = "power", py::arg("p") = 2.0, py::arg("q") = 2.0,
      py::arg("knee") = 1.0, py::arg("sigma") = 1.0);
  m.def(
      "besov_norm_thermic", [](const Array& f, double period, double beta) {
        return besov_norm_thermic(to_field(f, period), beta);
      },
      py::arg("values"), py::arg("period"), py::arg("beta"));
  m.def(
      "besov_norm_lp",
      [](const Array& f, double period, double beta) {
        const auto field = to_field(f, period);
        return besov_norm_lp(field, beta, LittlewoodPaleyBasis(field.domain()));
      },
      py::arg("values"), py::arg("period"), py::arg("beta"));
  m.def(
      "sample_gaussian",
      [](int dimension, double period, std::size_t points, double sigma) {
        return to_array(sample(DomainSpec(dimension, period, points), GeneratorSpec::gaussian(sigma)));
      },
      py::arg("dimension"), py::arg("period"), py::arg("points"), py::arg("sigma"));
  m.def(
      "sample_random_band_limited",
      [](int dimension, double period, std::size_t points, std::uint64_t seed, int max_band) {
        return to_array(
            sample(DomainSpec(dimension, period, points), GeneratorSpec::random_band_limited(seed, max_band)));
      },
      py::arg("dimension"), py::arg("period"), py::arg("points"), py::arg("seed"), py::arg("max_band"));

  m.def("sobolev_conjugate", &relations::sobolev_conjugate<double>, py::arg("n"), py::arg("s"), py::arg("p"));
  m.def("hedberg_theta", &relations::hedberg_theta<double>, py::arg("s"), py::arg("s1"), py::arg("beta"));
  m.def("sigma_exponent", &relations::sigma_exponent<double>, py::arg("n"), py::arg("s"), py::arg("frak_p"),
        py::arg("p"));

  m.def(
      "run_config",
      [](const std::string& json_text) {
        const auto cfg = RunConfig::parse(json_text);
        py::list out;
        for (const auto& r : run_cases(cfg.cases, cfg.family, VerifyOptions{cfg.refinement}, cfg.jobs)) {
          out.append(report_dict(r));
        }
        return out;
      },
      py::arg("json_text"), "Runs the cases of a JSON config and returns one dict per report; writes no files.");
  m.def("run_acceptance", [] {
    py::list out;
    for (const auto& c : run_acceptance().criteria) {
      py::dict d;
      d["id"] = c.id;
      d["name"] = c.name;
      d["pass"] = c.pass;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  });
}
