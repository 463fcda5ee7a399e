#include "crossnest/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace crossnest {

namespace {

std::string squeeze(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_small(const std::string& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseFailure("expected an integer, got '" + tok + "'");
  return value;
}

BigCount parse_big(const std::string& tok) {
  std::size_t digits = tok.size() - (tok.starts_with("-") ? 1 : 0);
  if (digits == 0 || tok.find_first_not_of("0123456789", tok.starts_with("-") ? 1 : 0) !=
                         std::string::npos)
    throw ParseFailure("expected an integer, got '" + tok + "'");
  return BigCount(tok);
}

// key=value fields separated by ';', in order; optional keys may be absent.
std::map<std::string, std::string> parse_fields(const std::string& text) {
  std::map<std::string, std::string> out;
  for (const std::string& field : split(squeeze(text), ';')) {
    if (field.empty()) continue;
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw ParseFailure("expected key=value, got '" + field + "'");
    std::string key = field.substr(0, eq);
    if (!out.emplace(key, field.substr(eq + 1)).second)
      throw ParseFailure("duplicate field '" + key + "'");
  }
  return out;
}

const std::string& require_field(const std::map<std::string, std::string>& fields,
                                 const std::string& key) {
  auto it = fields.find(key);
  if (it == fields.end()) throw ParseFailure("missing field '" + key + "'");
  return it->second;
}

struct ArcToken {
  int left = 0, right = 0, color = 1;
  bool tick_left = false, tick_right = false;
};

ArcToken parse_arc_token(const std::string& tok, bool allow_ticks) {
  ArcToken a;
  std::string body = tok;
  std::size_t colon = body.find(':');
  if (colon != std::string::npos) {
    a.color = parse_small(body.substr(colon + 1));
    body = body.substr(0, colon);
  }
  std::size_t dash = body.find('-');
  if (dash == std::string::npos) throw ParseFailure("expected i-j in arc '" + tok + "'");
  std::string lhs = body.substr(0, dash), rhs = body.substr(dash + 1);
  if (lhs.ends_with("'")) {
    a.tick_left = true;
    lhs.pop_back();
  }
  if (rhs.ends_with("'")) {
    a.tick_right = true;
    rhs.pop_back();
  }
  if ((a.tick_left || a.tick_right) && !allow_ticks)
    throw ParseFailure("unexpected tick in arc '" + tok + "'");
  a.left = parse_small(lhs);
  a.right = parse_small(rhs);
  return a;
}

std::vector<ArcToken> parse_arc_list(const std::string& value, bool allow_ticks) {
  std::vector<ArcToken> arcs;
  if (value.empty()) return arcs;
  for (const std::string& tok : split(value, ',')) arcs.push_back(parse_arc_token(tok, allow_ticks));
  return arcs;
}

std::string arc_body(int left, int right, int color, int r) {
  std::string out = std::to_string(left) + "-" + std::to_string(right);
  if (r > 1) out += ":" + std::to_string(color);
  return out;
}

// `r=<r>; ` prefix only when r is not recoverable from the colors
std::string header(int n, int r, int max_color) {
  std::string out;
  if (r != std::max(1, max_color)) out += "r=" + std::to_string(r) + "; ";
  out += "n=" + std::to_string(n) + "; arcs=";
  return out;
}

struct ParsedHeader {
  int n = 0;
  int r = 1;
  std::vector<ArcToken> arcs;
};

ParsedHeader parse_header(const std::string& text, bool allow_ticks) {
  auto fields = parse_fields(text);
  ParsedHeader h;
  h.n = parse_small(require_field(fields, "n"));
  h.arcs = parse_arc_list(require_field(fields, "arcs"), allow_ticks);
  int max_color = 1;
  for (const auto& a : h.arcs) max_color = std::max(max_color, a.color);
  h.r = fields.count("r") ? parse_small(fields.at("r")) : max_color;
  return h;
}

}  // namespace

std::string print_partition(const ColoredSetPartition& cp) {
  auto arcs = cp.colored_arcs();
  int max_color = 1;
  for (const auto& a : arcs) max_color = std::max(max_color, a.color);
  std::string out = header(cp.n(), cp.r(), max_color);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ",";
    out += arc_body(arcs[i].left, arcs[i].right, arcs[i].color, cp.r());
  }
  return out;
}

ColoredSetPartition parse_partition(const std::string& text) {
  ParsedHeader h = parse_header(text, false);
  std::vector<ColoredArc> arcs;
  for (const auto& a : h.arcs) arcs.push_back({a.left, a.right, a.color});
  return ColoredSetPartition::from_arcs(h.n, arcs, h.r);
}

std::string partition_json(const ColoredSetPartition& cp) {
  nlohmann::json j;
  j["n"] = cp.n();
  j["r"] = cp.r();
  auto arr = nlohmann::json::array();
  for (const auto& a : cp.colored_arcs()) arr.push_back({a.left, a.right, a.color});
  j["arcs"] = arr;
  return j.dump();
}

ColoredSetPartition parse_partition_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("bad json: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<ColoredArc> arcs;
    int max_color = 1;
    for (const auto& item : j.at("arcs")) {
      if (!item.is_array() || item.size() < 2 || item.size() > 3)
        throw ParseFailure("arc entries must be [i,j] or [i,j,c]");
      ColoredArc a{item[0].get<int>(), item[1].get<int>(),
                   item.size() == 3 ? item[2].get<int>() : 1};
      max_color = std::max(max_color, a.color);
      arcs.push_back(a);
    }
    int r = j.contains("r") ? j.at("r").get<int>() : max_color;
    return ColoredSetPartition::from_arcs(n, arcs, r);
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("bad json payload: ") + e.what());
  }
}

namespace {

std::string print_component(const IntegerPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts[i]);
  }
  return out;
}

}  // namespace

std::string print_tableau(const RPartiteTableau& t) {
  std::string out;
  for (std::size_t s = 0; s < t.steps.size(); ++s) {
    if (s) out += ";";
    for (int c = 0; c < t.r; ++c) {
      if (c) out += "|";
      out += print_component(t.steps[s][static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

RPartiteTableau parse_tableau(const std::string& text) {
  RPartiteTableau t;
  std::vector<std::string> steps = split(squeeze(text), ';');
  t.r = 0;
  for (const std::string& step : steps) {
    std::vector<std::string> comps = split(step, '|');
    if (t.r == 0) t.r = static_cast<int>(comps.size());
    if (static_cast<int>(comps.size()) != t.r)
      throw ParseFailure("inconsistent component count across steps");
    RPartitePartition shape;
    for (const std::string& comp : comps) {
      IntegerPartition p;
      if (!comp.empty())
        for (const std::string& part : split(comp, ',')) p.parts.push_back(parse_small(part));
      for (std::size_t i = 1; i < p.parts.size(); ++i)
        if (p.parts[i] > p.parts[i - 1] || p.parts[i] <= 0)
          throw ParseFailure("parts must be positive and weakly decreasing");
      if (!p.parts.empty() && p.parts[0] <= 0)
        throw ParseFailure("parts must be positive and weakly decreasing");
      shape.push_back(std::move(p));
    }
    t.steps.push_back(std::move(shape));
  }
  return t;
}

namespace {

std::string print_coeff_list(const IntPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (i) out += ",";
    out += p.c[i].get_str();
  }
  return out + "]";
}

IntPoly parse_coeff_list(const std::string& value) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']')
    throw ParseFailure("expected [c0,c1,...], got '" + value + "'");
  std::string inner = value.substr(1, value.size() - 2);
  std::vector<BigCount> coeffs;
  if (!inner.empty())
    for (const std::string& tok : split(inner, ',')) coeffs.push_back(parse_big(tok));
  return IntPoly(std::move(coeffs));
}

}  // namespace

std::string print_gf(const RationalGF& f) {
  return "num=" + print_coeff_list(f.num) + "; den=" + print_coeff_list(f.den);
}

RationalGF parse_gf(const std::string& text) {
  auto fields = parse_fields(text);
  RationalGF f{parse_coeff_list(require_field(fields, "num")),
               parse_coeff_list(require_field(fields, "den"))};
  if (f.den.coeff(0) != 1) throw ParseFailure("denominator constant term must be 1");
  return f;
}

std::string print_poly(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    BigCount c = p.coeff(d);
    if (c == 0) continue;
    BigCount a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (d == 0 || a != 1) out += a.get_str();
    if (d >= 1) {
      out += var;
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::string print_recurrence(const Recurrence& rec) {
  std::string out;
  for (std::size_t i = 0; i < rec.P.size(); ++i) {
    if (i) out += "; ";
    out += "P_" + std::to_string(i) + "=" + print_coeff_list(rec.P[i]);
  }
  return out;
}

Recurrence parse_recurrence(const std::string& text) {
  Recurrence rec;
  std::vector<std::string> fields = split(squeeze(text), ';');
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string want = "P_" + std::to_string(i) + "=";
    if (!fields[i].starts_with(want))
      throw ParseFailure("expected '" + want + "...' at position " + std::to_string(i));
    rec.P.push_back(parse_coeff_list(fields[i].substr(want.size())));
  }
  if (rec.P.empty()) throw ParseFailure("empty recurrence");
  return rec;
}

std::string print_series(const std::vector<BigCount>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += seq[i].get_str();
  }
  return out;
}

std::string print_enhanced(const EnhancedColoredPartition& e) {
  auto arcs = e.enhanced_arcs();
  int max_color = 1;
  for (const auto& a : arcs) max_color = std::max(max_color, a.color);
  std::string out = header(e.n(), e.r(), max_color);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ",";
    out += arc_body(arcs[i].left, arcs[i].right, arcs[i].color, e.r());
  }
  return out;
}

EnhancedColoredPartition parse_enhanced(const std::string& text) {
  ParsedHeader h = parse_header(text, false);
  std::vector<ColoredArc> arcs;
  for (const auto& a : h.arcs) arcs.push_back({a.left, a.right, a.color});
  return EnhancedColoredPartition::from_arcs(h.n, arcs, h.r);
}

std::string print_permutation(const ColoredPermutation& s) {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out;
  };
  std::string out;
  int max_color = 1;
  for (int c : s.upper_colors()) max_color = std::max(max_color, c);
  for (int c : s.lower_colors()) max_color = std::max(max_color, c);
  if (s.r() != max_color) out += "r=" + std::to_string(s.r()) + "; ";
  out += "sigma=" + join(s.word());
  out += "; upper=" + join(s.upper_colors());
  out += "; lower=" + join(s.lower_colors());
  return out;
}

ColoredPermutation parse_permutation(const std::string& text) {
  auto fields = parse_fields(text);
  auto ints = [](const std::string& value) {
    std::vector<int> out;
    if (value.empty()) return out;
    for (const std::string& tok : split(value, ',')) out.push_back(parse_small(tok));
    return out;
  };
  std::vector<int> word = ints(require_field(fields, "sigma"));
  std::vector<int> upper = ints(require_field(fields, "upper"));
  std::vector<int> lower = ints(require_field(fields, "lower"));
  int max_color = 1;
  for (int c : upper) max_color = std::max(max_color, c);
  for (int c : lower) max_color = std::max(max_color, c);
  int r = fields.count("r") ? parse_small(fields.at("r")) : max_color;
  return ColoredPermutation(std::move(word), std::move(upper), std::move(lower), r);
}

std::string print_tangled(const TangledDiagram& t) {
  const auto& arcs = t.arcs();
  int max_color = 1;
  for (const auto& a : arcs) max_color = std::max(max_color, a.color);
  std::string out = header(t.n(), t.r(), max_color);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ",";
    const TangledArc& a = arcs[i];
    bool loop = a.from.vertex == a.to.vertex;
    out += std::to_string(a.from.vertex);
    if (!loop && !a.from.second) out += "'";  // departure from the first copy
    out += "-" + std::to_string(a.to.vertex);
    if (!loop && a.to.second) out += "'";  // arrival on the second copy
    if (t.r() > 1) out += ":" + std::to_string(a.color);
  }
  return out;
}

TangledDiagram parse_tangled(const std::string& text) {
  ParsedHeader h = parse_header(text, true);
  std::vector<TangledArc> arcs;
  for (const auto& a : h.arcs) {
    TangledArc arc;
    arc.color = a.color;
    if (a.left == a.right) {
      if (a.tick_left || a.tick_right)
        throw ParseFailure("loops occupy both copies; ticks not allowed");
      arc.from = {a.left, false};
      arc.to = {a.right, true};
    } else {
      arc.from = {a.left, !a.tick_left};
      arc.to = {a.right, a.tick_right};
    }
    arcs.push_back(arc);
  }
  return TangledDiagram(h.n, std::move(arcs), h.r);
}

}  // namespace crossnest
