#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gaussdef/piecewise_density.hpp"
#include "gaussdef/report_io.hpp"
#include "json.hpp"

namespace gaussdef {

namespace {

using nlohmann::json;

// every numeric field carries 17 significant digits so fixtures round-trip
// bit-exactly through text
json num17(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return json::parse(buf);
}

double parse_num(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("density json: bad numeric string '" + s + "'");
  }
  return j.get<double>();
}

const char* kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::Flat: return "flat";
    case PieceKind::Bridge: return "bridge";
    case PieceKind::ExpTilt: return "exp_tilt";
    case PieceKind::Rational: return "rational";
    case PieceKind::GenericGrid: return "generic_grid";
  }
  return "?";
}

PieceKind kind_from(const std::string& s) {
  if (s == "flat") return PieceKind::Flat;
  if (s == "bridge") return PieceKind::Bridge;
  if (s == "exp_tilt") return PieceKind::ExpTilt;
  if (s == "rational") return PieceKind::Rational;
  if (s == "generic_grid") return PieceKind::GenericGrid;
  throw std::invalid_argument("density json: unknown piece kind '" + s + "'");
}

}  // namespace

std::string to_json_string(const PiecewiseLogDensity& d) {
  json root;
  root["symmetry"] = d.symmetry() == Symmetry::Even ? "even" : "full_line";
  root["norm_base"] = num17(d.norm_base());
  const LogValue corr = d.norm_correction();
  root["norm_correction"] = {{"log_abs", num17(corr.log_abs())},
                             {"sign", corr.sign()}};
  json pieces = json::array();
  for (const Piece& p : d.pieces()) {
    json jp;
    jp["kind"] = kind_name(p.kind);
    jp["x0"] = num17(p.x0);
    jp["x1"] = num17(p.x1);
    switch (p.kind) {
      case PieceKind::Flat:
        jp["log_value"] = num17(p.log_v);
        break;
      case PieceKind::ExpTilt:
        jp["log_r"] = num17(p.log_v);
        jp["b"] = num17(p.b);
        break;
      case PieceKind::Rational:
        jp["log_amp"] = num17(p.log_v);
        break;
      case PieceKind::Bridge:
        jp["top"] = num17(p.bridge.top);
        jp["bottom"] = num17(p.bridge.bottom);
        jp["shape"] = p.bridge.shape == BridgeShape::Quintic ? "quintic" : "cubic";
        break;
      case PieceKind::GenericGrid: {
        json gx = json::array(), gv = json::array();
        for (double x : p.grid_x) gx.push_back(num17(x));
        for (double v : p.grid_logv) gv.push_back(num17(v));
        jp["grid_x"] = gx;
        jp["grid_logv"] = gv;
        break;
      }
    }
    pieces.push_back(jp);
  }
  root["pieces"] = pieces;
  return root.dump(2);
}

PiecewiseLogDensity density_from_json_string(const std::string& text) {
  json root = json::parse(text);
  Symmetry sym = root.at("symmetry") == "even" ? Symmetry::Even : Symmetry::FullLine;
  std::vector<Piece> pieces;
  for (const json& jp : root.at("pieces")) {
    Piece p;
    p.kind = kind_from(jp.at("kind").get<std::string>());
    p.x0 = parse_num(jp.at("x0"));
    p.x1 = parse_num(jp.at("x1"));
    switch (p.kind) {
      case PieceKind::Flat:
        p.log_v = parse_num(jp.at("log_value"));
        break;
      case PieceKind::ExpTilt:
        p.log_v = parse_num(jp.at("log_r"));
        p.b = parse_num(jp.at("b"));
        break;
      case PieceKind::Rational:
        p.log_v = parse_num(jp.at("log_amp"));
        break;
      case PieceKind::Bridge:
        p.bridge.left = p.x0;
        p.bridge.right = p.x1;
        p.bridge.top = parse_num(jp.at("top"));
        p.bridge.bottom = parse_num(jp.at("bottom"));
        p.bridge.shape = jp.at("shape") == "quintic" ? BridgeShape::Quintic
                                                     : BridgeShape::Cubic;
        break;
      case PieceKind::GenericGrid:
        for (const json& v : jp.at("grid_x")) p.grid_x.push_back(parse_num(v));
        for (const json& v : jp.at("grid_logv")) p.grid_logv.push_back(parse_num(v));
        break;
    }
    pieces.push_back(std::move(p));
  }
  const json& jc = root.at("norm_correction");
  LogValue corr = LogValue::from_log(parse_num(jc.at("log_abs")),
                                     jc.at("sign").get<int>());
  return PiecewiseLogDensity::assemble(sym, std::move(pieces),
                                       parse_num(root.at("norm_base")), corr);
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {
std::string ptag(double p) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}
}  // namespace

std::string sweep_csv_header(const std::vector<double>& moment_ps,
                             const std::vector<double>& lp_ps,
                             const std::vector<double>& wass_ps) {
  std::ostringstream os;
  os << "s,t,k,I,H,delta";
  for (double p : moment_ps) os << ",m" << ptag(p);
  for (double p : lp_ps) os << ",l" << ptag(p) << ",log_l" << ptag(p);
  for (double p : wass_ps) os << ",w" << ptag(p);
  os << ",delta_tal,err_I,err_H";
  return os.str();
}

std::string sweep_csv_row(const SweepRow& row,
                          const std::vector<double>& moment_ps,
                          const std::vector<double>& lp_ps,
                          const std::vector<double>& wass_ps) {
  std::ostringstream os;
  os << fmt17(row.s) << ',' << fmt17(row.t) << ',' << fmt17(row.k) << ','
     << fmt17(row.fisher) << ',' << fmt17(row.entropy) << ',' << fmt17(row.deficit);
  for (double p : moment_ps) {
    const auto& m = row.moments.at(p);
    os << ',' << (m.divergent ? std::string("divergent") : fmt17(m.value));
  }
  for (double p : lp_ps) {
    const LogValue& l = row.lp_dist.at(p);
    os << ',' << fmt17(l.value()) << ',' << fmt17(l.log_abs());
  }
  for (double p : wass_ps) os << ',' << fmt17(row.wasserstein.at(p));
  os << ',' << fmt17(row.delta_tal) << ',' << fmt17(row.fisher_err) << ','
     << fmt17(row.entropy_err);
  return os.str();
}

std::string functional_report_json(const FunctionalReport& rep) {
  json j;
  j["dim"] = rep.dim;
  j["fisher"] = rep.fisher;
  j["entropy"] = rep.entropy;
  j["deficit"] = rep.deficit;
  j["deficit_consistency"] = rep.deficit_consistency;
  j["errors"] = {{"fisher", rep.fisher_err}, {"entropy", rep.entropy_err}};
  for (const auto& [p, m] : rep.moments) {
    j["moments"][ptag(p)] = m.divergent ? json("divergent") : json(m.value);
  }
  for (const auto& [p, l] : rep.lp_dist) {
    j["lp_dist"][ptag(p)] = {{"value", l.value()}, {"log", l.log_abs()}};
  }
  for (const auto& [p, b] : rep.moment_bounds) {
    json jb{{"lower", b.lower}};
    if (b.upper) jb["upper"] = *b.upper;
    j["moment_bounds"][ptag(p)] = jb;
  }
  return j.dump(2);
}

std::string transport_csv_header() {
  return "s,t,k,I,H,delta,w2,delta_tal,hwi_fisher_term,hwi_entropy_term,"
         "tal_term,ordering_ok";
}

std::string transport_csv_row(double s, double t, double k,
                              const TransportReport& rep) {
  std::ostringstream os;
  os << fmt17(s) << ',' << fmt17(t) << ',' << fmt17(k) << ',' << fmt17(rep.fisher)
     << ',' << fmt17(rep.entropy) << ',' << fmt17(rep.deficit) << ','
     << fmt17(rep.w2) << ',' << fmt17(rep.delta_tal) << ','
     << fmt17(rep.hwi_fisher_term) << ',' << fmt17(rep.hwi_entropy_term) << ','
     << (rep.tal_term ? fmt17(*rep.tal_term) : std::string("nan")) << ','
     << (rep.ordering_ok ? '1' : '0');
  return os.str();
}

std::string transport_report_json(double s, double t, double k,
                                  const TransportReport& rep) {
  json j;
  j["key"] = {{"s", s}, {"t", t}, {"k", k}};
  j["fisher"] = rep.fisher;
  j["entropy"] = rep.entropy;
  j["deficit"] = rep.deficit;
  j["w2"] = rep.w2;
  j["delta_tal"] = rep.delta_tal;
  j["chain"] = {{"deficit", rep.deficit},
                {"half_sq_sqrtI_minus_w2", rep.hwi_fisher_term},
                {"half_sq_sqrt2H_minus_w2", rep.hwi_entropy_term}};
  if (rep.tal_term) j["chain"]["tal_sq_over_16H"] = *rep.tal_term;
  j["ordering_ok"] = rep.ordering_ok;
  return j.dump(2);
}

}  // namespace gaussdef
