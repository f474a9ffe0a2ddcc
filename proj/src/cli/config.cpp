#include <algorithm>

#include "horadam/cli.hpp"

namespace horadam::cli {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from(const json& j, std::string_view key) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "config field '" + std::string(key) + "' must be an integer");
}

std::int64_t int64_from(const json& j, std::string_view key) {
  const Integer v = integer_from(j, key);
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "config field '" + std::string(key) + "' is out of range");
  return v.get_si();
}

}  // namespace

json to_json(const RunConfig& c) {
  json s = json::array();
  for (const Integer& v : c.s) s.push_back(integer_json(v));
  json j{
      {"a", integer_json(c.a)},
      {"b", integer_json(c.b)},
      {"p", integer_json(c.p)},
      {"q", integer_json(c.q)},
      {"m", c.m},
      {"s", s},
      {"l", c.l},
      {"alternating", c.alternating},
      {"family", c.family},
      {"n_start", c.n_start},
      {"n_end", c.n_end},
      {"n", c.n},
      {"eps", c.eps},
      {"output", c.output == OutputFormat::csv ? "csv" : "json"},
      {"digits", c.digits},
      {"threads", c.threads},
  };
  if (c.t) j["t"] = *c.t;
  return j;
}

RunConfig config_from_json(const json& j, RunConfig c) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "a") {
      c.a = integer_from(value, key);
    } else if (key == "b") {
      c.b = integer_from(value, key);
    } else if (key == "p") {
      c.p = integer_from(value, key);
    } else if (key == "q") {
      c.q = integer_from(value, key);
    } else if (key == "m") {
      c.m = int64_from(value, key);
    } else if (key == "s" || key == "l") {
      if (!value.is_array()) throw Error(ErrorCode::InvalidArgument, "config field '" + key + "' must be an array");
      if (key == "s") {
        c.s.clear();
        for (const auto& v : value) c.s.push_back(integer_from(v, key));
      } else {
        c.l.clear();
        for (const auto& v : value) c.l.push_back(int64_from(v, key));
      }
    } else if (key == "alternating") {
      if (!value.is_boolean()) throw Error(ErrorCode::InvalidArgument, "config field 'alternating' must be a boolean");
      c.alternating = value.get<bool>();
    } else if (key == "family") {
      c.family = value.get<std::string>();
    } else if (key == "t") {
      if (value.is_null()) {
        c.t.reset();
      } else {
        c.t = int64_from(value, key);
      }
    } else if (key == "n_start") {
      c.n_start = int64_from(value, key);
    } else if (key == "n_end") {
      c.n_end = int64_from(value, key);
    } else if (key == "n") {
      c.n = int64_from(value, key);
    } else if (key == "eps") {
      c.eps = value.is_string() ? value.get<std::string>() : value.dump();
    } else if (key == "output") {
      const auto v = value.get<std::string>();
      if (v != "csv" && v != "json") throw Error(ErrorCode::InvalidArgument, "output must be csv or json");
      c.output = v == "csv" ? OutputFormat::csv : OutputFormat::json;
    } else if (key == "digits") {
      c.digits = static_cast<int>(int64_from(value, key));
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(std::max<std::int64_t>(1, int64_from(value, key)));
    } else if (key == "preset") {
      // applied by the caller before the other fields
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown config field '" + key + "'");
    }
  }
  return c;
}

std::vector<std::string> preset_names() {
  return {"fibonacci", "fibonacci-stride3", "pell", "geometric", "three-minus-one", "pell-pair", "fibonacci-block"};
}

RunConfig preset(std::string_view name) {
  RunConfig c;
  if (name == "fibonacci") {
    // 1/F_k with estimate F_{n-2}
    return c;
  }
  if (name == "fibonacci-stride3") {
    // 1/F_{mk-l}, 1 - m <= l_0 < 0
    c.m = 3;
    c.l = {-1};
    return c;
  }
  if (name == "pell") {
    c.p = 2;
    return c;
  }
  if (name == "geometric") {
    // W_n = 2^n, zero estimate error
    c.a = 1;
    c.b = 2;
    c.p = 2;
    c.q = 0;
    return c;
  }
  if (name == "three-minus-one") {
    // W_{2k+1}(0, 1, 3, -1)
    c.p = 3;
    c.q = -1;
    c.m = 2;
    c.l = {1};
    return c;
  }
  if (name == "pell-pair") {
    // W_{mk} + W_{mk+d}, d = 2
    c.p = 2;
    c.q = 1;
    c.s = {Integer(1), Integer(1)};
    c.l = {0, 2};
    return c;
  }
  if (name == "fibonacci-block") {
    // sum_{i=0}^{t} W_{mk+i} with the 1/(alpha - 1) estimate
    c.p = 1;
    c.q = 1;
    c.m = 2;
    c.s = {Integer(1), Integer(1), Integer(1)};
    c.l = {0, 1, 2};
    c.family = "block";
    c.t = 2;
    return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

RecurrenceParams params_of(const RunConfig& c) { return RecurrenceParams(c.a, c.b, c.p, c.q); }

WeightedSelector selector_of(const RunConfig& c) {
  if (c.family == "block") {
    const std::int64_t t = c.t.value_or(static_cast<std::int64_t>(c.s.size()) - 1);
    return WeightedSelector::block(c.m, t);
  }
  return WeightedSelector(c.m, c.s, c.l);
}

EstimateFamily family_of(const RunConfig& c) {
  if (c.family == "general") return c.alternating ? EstimateFamily::alt_general : EstimateFamily::plain_general;
  if (c.family == "block") return c.alternating ? EstimateFamily::alt_block : EstimateFamily::plain_block;
  throw Error(ErrorCode::InvalidArgument, "family must be general or block (got '" + c.family + "')");
}

Rational eps_of(const RunConfig& c) {
  Rational eps = parse_rational(c.eps);
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must satisfy eps > 0");
  return eps;
}

}  // namespace horadam::cli
