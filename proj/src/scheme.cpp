#include "fvlim/scheme.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fvlim {

double scheme_h(const LimiterScheme& scheme, SlopePair s, double dx) {
  switch (scheme.kind) {
    case LimiterKind::H3:
      return h3(s);
    case LimiterKind::CT:
      return h_from_phi(phi_ct, s);
    case LimiterKind::CTTVD:
      return h_from_phi(phi_ct_tvd, s);
    case LimiterKind::CTCombined:
      return h_ct_combined(s, SmoothnessContext(0.0, dx, scheme.ct_radius), scheme.blend);
    case LimiterKind::AS:
      return h_from_phi([&](double th) { return phi_as(th, scheme.as_q); }, s);
    case LimiterKind::H3L:
      return h3l(s);
    case LimiterKind::H3LCombined:
      if (std::isnan(scheme.alpha))
        throw std::logic_error("scheme h3l-c: alpha is unresolved (set it or derive from the IC)");
      return h3l_combined(s, SmoothnessContext(scheme.alpha, dx), scheme.blend);
    case LimiterKind::WenoJS: {
      WenoParams p = scheme.weno;
      p.epsilon = scheme.eps.resolve(dx);
      p.validate();
      return h_weno(s, weights_js(s, p));
    }
    case LimiterKind::WenoYC:
    case LimiterKind::WenoPow: {
      const double e = scheme.eps.resolve(dx);
      if (std::isnan(e))
        throw std::logic_error("scheme weno-yc: epsilon is unresolved (set it or derive from the IC)");
      return h_weno(s, weights_yc(s, e, scheme.weno.gamma_minus, scheme.weno.gamma_plus));
    }
    case LimiterKind::UserPhi:
      if (!scheme.user_phi) throw std::logic_error("scheme user-phi: no function installed");
      return h_from_phi(scheme.user_phi, s);
  }
  throw std::logic_error("scheme_h: unknown kind");
}

namespace {

double parse_number(std::string_view v, std::string_view key) {
  double out = 0.0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("scheme: bad numeric value for '" + std::string(key) + "'");
  return out;
}

std::map<std::string, std::string, std::less<>> parse_args(std::string_view text) {
  std::map<std::string, std::string, std::less<>> args;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw std::invalid_argument("scheme: expected key=value, got '" + std::string(item) + "'");
    args[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
  }
  return args;
}

std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

LimiterScheme LimiterScheme::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string base(text.substr(0, colon));
  auto args = colon == std::string_view::npos
                  ? std::map<std::string, std::string, std::less<>>{}
                  : parse_args(text.substr(colon + 1));
  auto take = [&](const char* key) -> std::optional<double> {
    auto it = args.find(key);
    if (it == args.end()) return std::nullopt;
    const double v = parse_number(it->second, key);
    args.erase(it);
    return v;
  };

  LimiterScheme s;
  if (base == "h3") {
    s.kind = LimiterKind::H3;
  } else if (base == "ct") {
    s.kind = LimiterKind::CT;
  } else if (base == "ct-tvd") {
    s.kind = LimiterKind::CTTVD;
  } else if (base == "ct-c") {
    s.kind = LimiterKind::CTCombined;
    if (auto r = take("r")) s.ct_radius = *r;
    if (!(s.ct_radius > 0.0)) throw std::invalid_argument("scheme ct-c: r must be > 0");
    if (auto b = take("blend")) s.blend = *b != 0.0;
  } else if (base == "as") {
    s.kind = LimiterKind::AS;
    if (auto q = take("q")) s.as_q = *q;
    if (!(s.as_q > 0.0)) throw std::invalid_argument("scheme as: q must be > 0");
  } else if (base == "h3l") {
    s.kind = LimiterKind::H3L;
  } else if (base == "h3l-c") {
    s.kind = LimiterKind::H3LCombined;
    if (auto a = take("alpha")) s.alpha = *a;
    if (auto b = take("blend")) s.blend = *b != 0.0;
  } else if (base == "weno-js") {
    s.kind = LimiterKind::WenoJS;
    s.eps = {EpsilonPolicy::Kind::Fixed, 1e-6, 2.0};
    if (auto e = take("eps")) s.eps.value = *e;
    if (auto p = take("p")) s.weno.power_p = static_cast<int>(*p);
  } else if (base == "weno-yc") {
    s.kind = LimiterKind::WenoYC;
    s.eps = {EpsilonPolicy::Kind::ScaleDx2, std::numeric_limits<double>::quiet_NaN(), 2.0};
    if (auto e = take("eps")) s.eps.value = *e;
  } else if (base == "weno-pow") {
    s.kind = LimiterKind::WenoPow;
    s.eps = {EpsilonPolicy::Kind::PowerLaw, 1.0, 2.0};
    if (auto k = take("K")) s.eps.value = *k;
    if (auto q = take("q")) s.eps.exponent = *q;
    if (!(s.eps.value > 0.0)) throw std::invalid_argument("scheme weno-pow: K must be > 0");
  } else {
    throw std::invalid_argument("unknown scheme '" + std::string(base) + "'");
  }
  if (!args.empty())
    throw std::invalid_argument("scheme " + base + ": unknown option '" + args.begin()->first +
                                "'");
  return s;
}

std::string LimiterScheme::name() const {
  switch (kind) {
    case LimiterKind::H3: return "h3";
    case LimiterKind::CT: return "ct";
    case LimiterKind::CTTVD: return "ct-tvd";
    case LimiterKind::CTCombined: return "ct-c:r=" + short_num(ct_radius);
    case LimiterKind::AS: return "as:q=" + short_num(as_q);
    case LimiterKind::H3L: return "h3l";
    case LimiterKind::H3LCombined:
      return std::isnan(alpha) ? "h3l-c" : "h3l-c:alpha=" + short_num(alpha);
    case LimiterKind::WenoJS: return "weno-js:eps=" + short_num(eps.value);
    case LimiterKind::WenoYC:
      return std::isnan(eps.value) ? "weno-yc" : "weno-yc:eps=" + short_num(eps.value);
    case LimiterKind::WenoPow:
      return "weno-pow:K=" + short_num(eps.value) + ",q=" + short_num(eps.exponent);
    case LimiterKind::UserPhi: return "user-phi";
  }
  return "?";
}

std::string LimiterScheme::canonical() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "kind=%d;q=%.17g;r=%.17g;alpha=%.17g;blend=%d;p=%d;eps_kind=%d;eps=%.17g;eps_exp=%.17g",
                static_cast<int>(kind), as_q, ct_radius, alpha, blend ? 1 : 0, weno.power_p,
                static_cast<int>(eps.kind), eps.value, eps.exponent);
  return buf;
}

}  // namespace fvlim
