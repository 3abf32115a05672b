#include "nrange/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nrange::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const StepFunction& f) {
  return json{{"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

StepFunction step_from_json(const json& j) {
  if (!j.contains("breakpoints") || !j.contains("values"))
    throw std::invalid_argument(
        "step function JSON needs 'breakpoints' and 'values'");
  return StepFunction(j.at("breakpoints").get<std::vector<double>>(),
                      j.at("values").get<std::vector<double>>());
}

json to_json(const SpectralModel& m) {
  switch (m.kind()) {
    case SpectralModel::Kind::matrix: {
      const auto& mt = m.matrix_value();
      json rows = json::array();
      for (std::size_t i = 0; i < mt.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < mt.dim(); ++j)
          row.push_back({mt.at(i, j).real(), mt.at(i, j).imag()});
        rows.push_back(std::move(row));
      }
      return json{{"kind", "matrix"}, {"entries", std::move(rows)}};
    }
    case SpectralModel::Kind::atomic: {
      json atoms = json::array();
      for (const Atom& a : m.atoms())
        atoms.push_back({{"re", a.location.real()},
                         {"im", a.location.imag()},
                         {"w", a.weight}});
      return json{{"kind", "atomic"}, {"atoms", std::move(atoms)}};
    }
    case SpectralModel::Kind::named: {
      json params = json::object();
      switch (m.named()) {
        case SpectralModel::Named::semicircular:
          params["mean"] = m.mean();
          params["variance"] = m.variance();
          break;
        case SpectralModel::Named::elliptic:
          params["psi"] = m.psi();
          break;
        default:
          break;
      }
      return json{{"kind", "named"},
                  {"name", m.describe()},
                  {"params", std::move(params)}};
    }
  }
  throw std::logic_error("to_json: bad model kind");
}

SpectralModel model_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "matrix") {
    const auto& rows = j.at("entries");
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("matrix JSON: empty");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw std::invalid_argument("matrix JSON: not square");
      for (std::size_t k = 0; k < n; ++k) {
        const auto& e = rows[i][k];
        if (!e.is_array() || e.size() != 2)
          throw std::invalid_argument("matrix JSON: entry must be [re,im]");
        m.at(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
      }
    }
    return SpectralModel::matrix(std::move(m));
  }
  if (kind == "atomic") {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms"))
      atoms.push_back(Atom{cplx(a.at("re").get<double>(),
                                a.value("im", 0.0)),
                           a.at("w").get<double>()});
    return SpectralModel::atomic(std::move(atoms));
  }
  if (kind == "named") {
    const std::string name = j.at("name").get<std::string>();
    const json params = j.value("params", json::object());
    if (name == "haar_unitary") return SpectralModel::haar_unitary();
    if (name == "semicircular")
      return SpectralModel::semicircular(params.value("mean", 0.0),
                                         params.value("variance", 1.0));
    if (name == "circular") return SpectralModel::circular();
    if (name == "tucci") return SpectralModel::tucci();
    if (name == "dt_quasinilpotent") return SpectralModel::dt_quasinilpotent();
    if (name == "elliptic") return SpectralModel::elliptic(
        params.at("psi").get<double>());
    throw std::invalid_argument("unknown named operator '" + name + "'");
  }
  throw std::invalid_argument("operator JSON: unknown kind '" + kind + "'");
}

json to_json(const MajorizationVerdict& v) {
  return json{{"majorizes", v.majorizes},
              {"worst_t", v.worst_t},
              {"total_integral_gap", v.total_integral_gap}};
}

json weight_to_json(const WeightSpec& w) {
  if (w.is_alpha()) return json{{"kind", "alpha"}, {"alpha", w.alpha_value()}};
  return json{{"kind", "step"}, {"lambda_c", to_json(w.lambda_c())}};
}

json report_to_json(const RangeReport& r) {
  json vertices = json::array();
  for (const cplx& v : r.region.vertices())
    vertices.push_back({v.real(), v.imag()});
  json out{{"region", json{{"vertices", std::move(vertices)}}},
           {"directions", r.directions},
           {"resolution", r.resolution},
           {"operator_digest", r.operator_digest},
           {"weight_digest", r.weight_digest},
           {"is_degenerate_interval", r.is_degenerate_interval}};
  if (r.is_degenerate_interval)
    out["interval"] = {r.interval.lo, r.interval.hi};
  if (r.region.support()) {
    out["support"] = json{{"theta", r.region.support()->thetas},
                          {"g", r.region.support()->values}};
  }
  return out;
}

ConvexRegion region_from_report_json(const json& j) {
  const auto& verts = j.at("region").at("vertices");
  std::vector<cplx> vertices;
  vertices.reserve(verts.size());
  for (const auto& v : verts)
    vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
  std::optional<SupportSample> sample;
  if (j.contains("support")) {
    SupportSample s;
    s.thetas = j.at("support").at("theta").get<std::vector<double>>();
    s.values = j.at("support").at("g").get<std::vector<double>>();
    sample = std::move(s);
  }
  return ConvexRegion::from_vertices(std::move(vertices), std::move(sample));
}

std::string csv_polygon(const ConvexRegion& region) {
  std::string out = "x,y\n";
  for (const cplx& v : region.vertices()) {
    out += format_double(v.real());
    out += ',';
    out += format_double(v.imag());
    out += '\n';
  }
  return out;
}

std::string csv_support(const SupportSample& sample) {
  std::string out = "theta,g\n";
  for (std::size_t j = 0; j < sample.thetas.size(); ++j) {
    out += format_double(sample.thetas[j]);
    out += ',';
    out += format_double(sample.values[j]);
    out += '\n';
  }
  return out;
}

std::string csv_cloud(const oracle::OracleCloud& cloud) {
  std::string out = "x,y\n";
  for (const cplx& p : cloud.points) {
    out += format_double(p.real());
    out += ',';
    out += format_double(p.imag());
    out += '\n';
  }
  return out;
}

std::string svg_region(const ConvexRegion& region) {
  // map the region's bounding square (plus margin) onto the 800x800 viewbox
  double extent = std::max(region.extent(), 1e-12);
  extent *= 1.15;
  const double half = 400.0;
  auto px = [&](double x) { return half + half * x / extent; };
  auto py = [&](double y) { return half - half * y / extent; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
  svg << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  svg << "  <line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#aaa\"/>\n";
  svg << "  <line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#aaa\"/>\n";
  const auto& verts = region.vertices();
  if (verts.size() == 1) {
    svg << "  <circle cx=\"" << px(verts[0].real()) << "\" cy=\""
        << py(verts[0].imag()) << "\" r=\"3\" fill=\"#1f6fb2\"/>\n";
  } else {
    svg << "  <path d=\"";
    for (std::size_t i = 0; i < verts.size(); ++i) {
      svg << (i == 0 ? 'M' : 'L') << px(verts[i].real()) << ' '
          << py(verts[i].imag());
    }
    svg << (verts.size() > 2 ? "Z" : "")
        << "\" fill=\"#1f6fb266\" stroke=\"#1f6fb2\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

json load_json(const std::string& path) {
  return json::parse(read_file(path));
}

}  // namespace nrange::io
