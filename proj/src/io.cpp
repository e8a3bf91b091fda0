#include "orlicz/io.hpp"

#include <fstream>
#include <sstream>

namespace orlicz::io {

namespace {

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(field + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw InputError(field, "expected a number");
  return j.get<double>();
}

double number_at(const json& j, const char* key, const std::string& field) {
  return number(member(j, key, field), field + "." + key);
}

template <class F>
auto guarded(const std::string& field, F&& build) {
  try {
    return build();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(field, e.what());
  } catch (const std::domain_error& e) {
    throw InputError(field, e.what());
  }
}

Tail tail_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  if (j.contains("slope")) return SlopeTail{number_at(j, "slope", field)};
  if (j.contains("b")) {
    BoundedTail bt;
    bt.b = number_at(j, "b", field);
    bt.phi_b = ext_from_json(member(j, "phi_b", field), field + ".phi_b");
    if (j.contains("kappa")) bt.kappa = number_at(j, "kappa", field);
    return bt;
  }
  throw InputError(field, "expected \"slope\" or \"b\"");
}

}  // namespace

json to_json(ExtReal x) {
  if (x.is_inf()) return "inf";
  return x.value();
}

ExtReal ext_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtReal::infinity();
    throw InputError(field, "expected a number or \"inf\"");
  }
  return guarded(field, [&] { return ExtReal(number(j, field)); });
}

json to_json(const YoungFunction& phi) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, family::Power>) {
          return {{"family", "power"}, {"p", d.p}};
        } else if constexpr (std::is_same_v<T, family::PowerLog>) {
          return {{"family", "powerlog"}, {"p", d.p}, {"q", d.q}};
        } else if constexpr (std::is_same_v<T, family::ExpPower>) {
          return {{"family", "exppower"}, {"p", d.p}};
        } else if constexpr (std::is_same_v<T, family::LinfIndicator>) {
          return {{"family", "linf"}};
        } else if constexpr (std::is_same_v<T, family::PiecewiseLinear>) {
          json bps = json::array();
          for (const auto& b : d.breakpoints) bps.push_back({b.t, b.y});
          json tail;
          if (const auto* s = std::get_if<SlopeTail>(&d.tail)) {
            tail = {{"slope", s->slope}};
          } else {
            const auto& bt = std::get<BoundedTail>(d.tail);
            tail = {{"b", bt.b}, {"phi_b", to_json(bt.phi_b)}};
            if (bt.kappa) tail["kappa"] = *bt.kappa;
          }
          return {{"family", "pl"}, {"breakpoints", bps}, {"tail", tail}};
        } else if constexpr (std::is_same_v<T, family::Sum>) {
          return {{"family", "sum"}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}};
        } else {
          return {{"family", "argscale"}, {"inner", to_json(d.inner)}, {"c", d.c}};
        }
      },
      phi.node().descriptor);
}

YoungFunction young_from_json(const json& j, const std::string& field) {
  const json& fam = member(j, "family", field);
  if (!fam.is_string()) throw InputError(field + ".family", "expected a string");
  const std::string name = fam.get<std::string>();
  return guarded(field, [&]() -> YoungFunction {
    if (name == "power") return YoungFunction::power(number_at(j, "p", field));
    if (name == "powerlog") return YoungFunction::power_log(number_at(j, "p", field), number_at(j, "q", field));
    if (name == "exppower") return YoungFunction::exp_power(number_at(j, "p", field));
    if (name == "linf") return YoungFunction::linf_indicator();
    if (name == "pl") {
      const json& bps = member(j, "breakpoints", field);
      if (!bps.is_array()) throw InputError(field + ".breakpoints", "expected an array of [t, y] pairs");
      std::vector<Breakpoint> pts;
      for (std::size_t i = 0; i < bps.size(); ++i) {
        const std::string f = field + ".breakpoints[" + std::to_string(i) + "]";
        if (!bps[i].is_array() || bps[i].size() != 2) throw InputError(f, "expected [t, y]");
        pts.push_back({number(bps[i][0], f + "[0]"), number(bps[i][1], f + "[1]")});
      }
      return YoungFunction::piecewise_linear(std::move(pts), tail_from_json(member(j, "tail", field), field + ".tail"));
    }
    if (name == "sum")
      return YoungFunction::sum(young_from_json(member(j, "lhs", field), field + ".lhs"),
                                young_from_json(member(j, "rhs", field), field + ".rhs"));
    if (name == "argscale")
      return YoungFunction::arg_scale(young_from_json(member(j, "inner", field), field + ".inner"),
                                      number_at(j, "c", field));
    throw InputError(field + ".family", "unknown family \"" + name + "\"");
  });
}

json to_json(const SimpleFunction& f) {
  json atoms = json::array();
  for (std::size_t k = 0; k < f.size(); ++k) atoms.push_back({{"weight", f.space().weight(k)}, {"value", f.value(k)}});
  return {{"atoms", atoms}};
}

SimpleFunction simple_from_json(const json& j, const std::string& field) {
  const json& atoms = member(j, "atoms", field);
  if (!atoms.is_array()) throw InputError(field + ".atoms", "expected an array");
  std::vector<double> w, v;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string f = field + ".atoms[" + std::to_string(i) + "]";
    w.push_back(number_at(atoms[i], "weight", f));
    v.push_back(number_at(atoms[i], "value", f));
  }
  return guarded(field, [&] { return SimpleFunction(MeasureSpace(std::move(w)), std::move(v)); });
}

SimpleFunction simple_from_csv(const std::string& text, const std::string& field) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> w, v;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    const std::string f = field + " row " + std::to_string(row);
    auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError(f, "expected \"weight,value\"");
    try {
      std::size_t used1 = 0, used2 = 0;
      std::string a = line.substr(0, comma), b = line.substr(comma + 1);
      double wt = std::stod(a, &used1);
      double val = std::stod(b, &used2);
      if (a.find_first_not_of(" \t", used1) != std::string::npos ||
          b.find_first_not_of(" \t", used2) != std::string::npos)
        throw InputError(f, "trailing characters");
      w.push_back(wt);
      v.push_back(val);
    } catch (const std::logic_error&) {
      if (w.empty() && row == 1 && line.find_first_of("0123456789") == std::string::npos) continue;  // header
      throw InputError(f, "expected two numbers");
    }
  }
  return guarded(field, [&] { return SimpleFunction(MeasureSpace(std::move(w)), std::move(v)); });
}

json to_json(const NormResult& r) {
  json j{{"value", to_json(r.value)}, {"method", to_string(r.method)}};
  j["residual"] = r.residual ? json(*r.residual) : json(nullptr);
  return j;
}

json to_json(const LogGrid& g) { return {{"u_min", g.u_min}, {"u_max", g.u_max}, {"count", g.count}}; }

LogGrid grid_from_json(const json& j, const std::string& field) {
  LogGrid g;
  if (!j.is_object()) throw InputError(field, "expected an object");
  if (j.contains("u_min")) g.u_min = number_at(j, "u_min", field);
  if (j.contains("u_max")) g.u_max = number_at(j, "u_max", field);
  if (j.contains("count")) {
    const json& c = j["count"];
    if (!c.is_number_integer()) throw InputError(field + ".count", "expected an integer");
    g.count = c.get<int>();
  }
  guarded(field, [&] {
    g.validate();
    return 0;
  });
  return g;
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(field, "cannot open file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json_arg(const std::string& arg, const std::string& field) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  const std::string text = inline_json ? arg : read_file(arg, field);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(field, std::string("malformed JSON: ") + e.what());
  }
}

SimpleFunction load_data_arg(const std::string& arg, const std::string& field) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && arg[first] == '{';
  if (!inline_json && arg.size() >= 4 && arg.compare(arg.size() - 4, 4, ".csv") == 0)
    return simple_from_csv(read_file(arg, field), field);
  return simple_from_json(load_json_arg(arg, field), field);
}

}  // namespace orlicz::io
