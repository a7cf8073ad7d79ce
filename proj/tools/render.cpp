#include "render.hpp"

#include <array>
#include <sstream>
#include <utility>
#include <vector>

namespace roelcke::render {

namespace {

struct Scene {
  std::vector<std::pair<std::string, PiecewiseLinear>> series;
  std::vector<OpenInterval> gaps;
  bool is_gapset = false;
  // Vertical range is [-1,1] instead of [0,1].
  bool signed_range = false;
};

Scene classify(const json::json& doc) {
  if (!doc.is_object()) throw InputError("plot input must be a JSON object");
  Scene s;
  if (doc.contains("gaps")) {
    const auto g = json::gapset_from_json(doc);
    s.gaps.assign(g.gaps().begin(), g.gaps().end());
    s.is_gapset = true;
  } else if (doc.contains("components")) {
    const auto [t, w] = json::tuple_from_json(doc);
    for (std::size_t i = 0; i < t.size(); ++i) s.series.emplace_back("component" + std::to_string(i), t[i].graph());
  } else if (doc.contains("breakpoints")) {
    if (!doc.contains("kind")) {
      s.series.emplace_back("f", json::mono_from_json(doc).graph());
    } else if (doc.at("kind") == "roelcke") {
      s.series.emplace_back("roelcke", json::roelcke_from_json(doc).function());
      s.signed_range = true;
    } else {
      throw InputError("unknown object kind " + doc.at("kind").dump());
    }
  } else {
    throw InputError("unknown object kind: expected breakpoints, components or gaps");
  }
  return s;
}

std::string px(const Rational& unit) { return decimal(20 + 400 * unit); }

std::string py(const Rational& y, bool signed_range) {
  return decimal(signed_range ? 220 - 200 * y : 420 - 400 * y);
}

constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

}  // namespace

std::string decimal(const Rational& r, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = r < 0;
  const Rational scaled = Rational(abs(r)) * scale + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string whole = mpz_class(q / scale).get_str();
  std::string frac = mpz_class(q % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && q != 0) ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::string svg(const json::json& doc) {
  const Scene s = classify(doc);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" viewBox=\"0 0 440 440\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"440\" height=\"440\" fill=\"#ffffff\"/>\n";
  for (const auto& g : s.gaps) {
    o << "<rect class=\"gap\" x=\"" << px(g.lo) << "\" y=\"20\" width=\"" << decimal(400 * (g.hi - g.lo))
      << "\" height=\"400\" fill=\"#d9d9d9\"/>\n";
  }
  o << "<rect class=\"frame\" x=\"20\" y=\"20\" width=\"400\" height=\"400\" fill=\"none\" stroke=\"#000000\"/>\n";
  if (s.signed_range) {
    o << "<line class=\"axis\" x1=\"20\" y1=\"220\" x2=\"420\" y2=\"220\" stroke=\"#999999\"/>\n";
  }
  for (std::size_t k = 0; k < s.series.size(); ++k) {
    const auto& [name, f] = s.series[k];
    o << "<path class=\"" << name << "\" fill=\"none\" stroke=\"" << kColors[k % kColors.size()] << "\" d=\"";
    const auto v = f.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      o << (i == 0 ? "M " : " L ") << px(v[i].x) << ' ' << py(v[i].y, s.signed_range);
    }
    o << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string csv(const json::json& doc) {
  const Scene s = classify(doc);
  std::ostringstream o;
  if (s.is_gapset) {
    o << "gap,lo,hi\n";
    for (std::size_t k = 0; k < s.gaps.size(); ++k) {
      o << k << ',' << to_string(s.gaps[k].lo) << ',' << to_string(s.gaps[k].hi) << '\n';
    }
    return o.str();
  }
  o << "series,x,y\n";
  for (const auto& [name, f] : s.series) {
    for (const auto& v : f.vertices()) o << name << ',' << to_string(v.x) << ',' << to_string(v.y) << '\n';
  }
  return o.str();
}

}  // namespace roelcke::render
