// cmgf: exact evaluation of completely multiplicative +-1 sequences, their
// generating functions, named constants, and the algebraic hypothesis checks
// built on them. Every number crosses this boundary as an exact "p/q" string;
// exit codes: 0 success, 1 domain/usage error, 2 verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmgf/cmgf.hpp"
#include "json.hpp"

using nlohmann::ordered_json;
using namespace cmgf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

enum class Format { json, csv, plain };

struct CommonSequenceOpts {
  std::string sequence = "liouville";
  std::uint32_t p = 3;
  int epsilon = 1;
  std::string rule = "legendre";
};

struct CommonFamilyOpts {
  std::string family = "G";
  std::uint32_t p = 3;
  int epsilon = 1;
  std::string rule = "legendre";
};

ResidueRule parse_rule(const std::string& r) {
  if (r == "legendre") return ResidueRule::legendre_symbol;
  if (r == "trivial") return ResidueRule::trivial;
  throw std::invalid_argument("unknown residue rule '" + r + "' (legendre|trivial)");
}

SequenceSpec parse_sequence(const CommonSequenceOpts& o) {
  if (o.sequence == "liouville") return liouville_spec();
  if (o.sequence == "gaussian") return gaussian_liouville_spec();
  if (o.sequence == "mod3") return mod3_spec();
  if (o.sequence == "character") {
    return character_like_spec(o.p, sign_from_int(o.epsilon), parse_rule(o.rule));
  }
  throw std::invalid_argument("unknown sequence '" + o.sequence +
                              "' (liouville|gaussian|mod3|character)");
}

GenFunSpec parse_family(const CommonFamilyOpts& o) {
  if (o.family == "G") return genfun_gaussian();
  if (o.family == "T") return genfun_mod3();
  if (o.family == "F") {
    return genfun_character(o.p, sign_from_int(o.epsilon), parse_rule(o.rule));
  }
  throw std::invalid_argument("unknown family '" + o.family + "' (G|T|F)");
}

BigRational parse_point(const std::string& s) { return BigRational::from_string(s); }

std::uint32_t default_precision() {
  if (const char* env = std::getenv("CMGF_PRECISION_BITS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 8 && v <= (1 << 24)) return static_cast<std::uint32_t>(v);
  }
  return 128;
}

ordered_json width_bits_json(const Enclosure& e) {
  auto wb = e.width_bits();
  if (!wb) return nullptr;
  return *wb;
}

std::string width_bits_csv(const Enclosure& e) {
  auto wb = e.width_bits();
  return wb ? std::to_string(*wb) : "exact";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void emit_csv_row(const std::vector<std::pair<std::string, std::string>>& row) {
  std::string header, values;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) {
      header += ',';
      values += ',';
    }
    header += row[i].first;
    values += row[i].second;
  }
  std::cout << header << "\n" << values << "\n";
}

std::string bits_string(const std::vector<Sign>& v, std::uint32_t n) {
  std::string s;
  s.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) s += (v[i] == Sign::plus_one) ? '1' : '0';
  return s;
}

// ----------------------------------------------------------------------------

int run_seq(const CommonSequenceOpts& so, std::uint32_t limit, Format fmt) {
  SequenceSpec spec = parse_sequence(so);
  std::vector<Sign> v = values_range(spec, limit);
  if (fmt == Format::csv) {
    std::cout << "n,value,bit\n";
    for (std::uint32_t n = 1; n <= limit; ++n) {
      std::cout << n << ',' << to_int(v[n]) << ',' << (v[n] == Sign::plus_one ? 1 : 0) << "\n";
    }
  } else if (fmt == Format::plain) {
    for (std::uint32_t n = 1; n <= limit; ++n) std::cout << (n > 1 ? " " : "") << to_int(v[n]);
    std::cout << "\n";
  } else {
    ordered_json j;
    j["command"] = "seq";
    j["sequence"] = to_string(spec);
    j["limit"] = limit;
    ordered_json vals = ordered_json::array();
    for (std::uint32_t n = 1; n <= limit; ++n) vals.push_back(to_int(v[n]));
    j["values"] = vals;
    j["bits"] = bits_string(v, limit);
    emit(j);
  }
  return kExitOk;
}

NamedConstant parse_constant(const std::string& name, const CommonSequenceOpts& so) {
  if (name == "l") return liouville_number();
  if (name == "gamma-bits") return gaussian_bits_gamma();
  if (name == "g-half") return gaussian_series_half();
  if (name == "tau-bits") return mod3_bits_tau();
  if (name == "t-half") return mod3_series_half();
  if (name == "phi") return character_phi(so.p, sign_from_int(so.epsilon), parse_rule(so.rule));
  throw std::invalid_argument("unknown constant '" + name +
                              "' (l|gamma-bits|g-half|tau-bits|t-half|phi)");
}

int run_digits(const std::string& name, const CommonSequenceOpts& so, std::uint32_t n, Format fmt) {
  NamedConstant c = parse_constant(name, so);
  std::string d = digits(c, n);
  if (fmt == Format::json) {
    ordered_json j;
    j["command"] = "digits";
    j["name"] = constant_slug(c);
    j["n_digits"] = n;
    j["digits"] = d;
    emit(j);
  } else if (fmt == Format::csv) {
    emit_csv_row({{"name", constant_slug(c)}, {"n_digits", std::to_string(n)}, {"digits", d}});
  } else {
    std::cout << d << "\n";
  }
  return kExitOk;
}

int run_eval(const CommonFamilyOpts& fo, const std::string& zs, const std::string& route,
             std::uint32_t terms, Format fmt) {
  GenFunSpec spec = parse_family(fo);
  BigRational z = parse_point(zs);
  Enclosure e = [&] {
    if (route == "direct") return eval_direct(spec, z, terms);
    if (route == "closed") return eval_closed(spec, z, terms);
    throw std::invalid_argument("unknown route '" + route + "' (direct|closed)");
  }();
  if (fmt == Format::csv) {
    emit_csv_row({{"family", fo.family},
                  {"z", z.to_string()},
                  {"route", route},
                  {"n_terms", std::to_string(terms)},
                  {"enclosure_lo", e.lo().to_string()},
                  {"enclosure_hi", e.hi().to_string()},
                  {"width_bits", width_bits_csv(e)}});
  } else if (fmt == Format::plain) {
    std::cout << "[" << e.lo().to_string() << ", " << e.hi().to_string() << "]\n";
  } else {
    ordered_json j;
    j["command"] = "eval";
    j["family"] = fo.family;
    if (spec.family == Family::character_f) {
      j["p"] = fo.p;
      j["epsilon"] = fo.epsilon;
      j["rule"] = fo.rule;
    }
    j["z"] = z.to_string();
    j["route"] = route;
    j["n_terms"] = terms;
    j["enclosure_lo"] = e.lo().to_string();
    j["enclosure_hi"] = e.hi().to_string();
    j["width_bits"] = width_bits_json(e);
    emit(j);
  }
  return kExitOk;
}

int run_residual(const CommonFamilyOpts& fo, const std::string& zs, std::uint32_t precision,
                 std::uint32_t telescope_m, Format fmt) {
  GenFunSpec spec = parse_family(fo);
  BigRational z = parse_point(zs);
  bool telescoping = telescope_m > 0;
  Enclosure e = telescoping ? telescoping_residual(spec, z, telescope_m, precision)
                            : functional_equation_residual(spec, z, precision);
  bool ok = e.contains_zero();
  if (fmt == Format::csv) {
    emit_csv_row({{"family", fo.family},
                  {"z", z.to_string()},
                  {"kind", telescoping ? "telescoping" : "functional"},
                  {"m", telescoping ? std::to_string(telescope_m) : ""},
                  {"precision_bits", std::to_string(precision)},
                  {"lo", e.lo().to_string()},
                  {"hi", e.hi().to_string()},
                  {"width_bits", width_bits_csv(e)},
                  {"contains_zero", ok ? "true" : "false"}});
  } else if (fmt == Format::plain) {
    std::cout << (ok ? "contains zero" : "EXCLUDES zero") << " [" << e.lo().to_string() << ", "
              << e.hi().to_string() << "]\n";
  } else {
    ordered_json j;
    j["command"] = "residual";
    j["family"] = fo.family;
    if (spec.family == Family::character_f) {
      j["p"] = fo.p;
      j["epsilon"] = fo.epsilon;
      j["rule"] = fo.rule;
    }
    j["z"] = z.to_string();
    j["kind"] = telescoping ? "telescoping" : "functional";
    if (telescoping) j["m"] = telescope_m;
    j["precision_bits"] = precision;
    j["lo"] = e.lo().to_string();
    j["hi"] = e.hi().to_string();
    j["width_bits"] = width_bits_json(e);
    j["contains_zero"] = ok;
    emit(j);
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_constants(const std::string& name, const CommonSequenceOpts& so, std::uint32_t precision,
                  std::uint32_t n_digits, Format fmt) {
  NamedConstant c = parse_constant(name, so);
  Enclosure e = value(c, precision);
  std::optional<std::string> digit_string;
  if (n_digits > 0) digit_string = digits(c, n_digits);
  if (fmt == Format::csv) {
    emit_csv_row({{"name", constant_slug(c)},
                  {"precision_bits", std::to_string(precision)},
                  {"lo", e.lo().to_string()},
                  {"hi", e.hi().to_string()},
                  {"width_bits", width_bits_csv(e)},
                  {"n_digits", n_digits > 0 ? std::to_string(n_digits) : ""},
                  {"digits", digit_string.value_or("")}});
  } else if (fmt == Format::plain) {
    std::cout << constant_slug(c) << " in [" << e.lo().to_decimal_string(30) << ", "
              << e.hi().to_decimal_string(30) << "]\n";
    if (digit_string) std::cout << "0." << *digit_string << " (binary)\n";
  } else {
    ordered_json j;
    j["command"] = "constants";
    j["name"] = constant_slug(c);
    j["precision_bits"] = precision;
    j["lo"] = e.lo().to_string();
    j["hi"] = e.hi().to_string();
    j["width_bits"] = width_bits_json(e);
    j["n_digits"] = n_digits > 0 ? ordered_json(n_digits) : ordered_json(nullptr);
    j["digits"] = digit_string ? ordered_json(*digit_string) : ordered_json(nullptr);
    emit(j);
  }
  return kExitOk;
}

int run_mahler(const std::string& instance, const CommonSequenceOpts& so, const std::string& alpha_s,
               std::uint32_t k_max, Format fmt) {
  BigRational alpha = parse_point(alpha_s);
  MahlerInstance inst = [&] {
    if (instance == "G") return mahler_gaussian_instance(alpha);
    if (instance == "F") {
      return mahler_character_instance(so.p, sign_from_int(so.epsilon), parse_rule(so.rule), alpha);
    }
    throw std::invalid_argument("unknown instance '" + instance + "' (G|F)");
  }();
  MahlerReport rep = check_mahler(inst, k_max);
  if (fmt == Format::csv) {
    emit_csv_row({{"instance", instance},
                  {"alpha", alpha.to_string()},
                  {"d", std::to_string(rep.d)},
                  {"m", std::to_string(rep.m)},
                  {"k_max", std::to_string(rep.k_max)},
                  {"degree_ok", rep.degree_ok ? "true" : "false"},
                  {"alpha_ok", rep.alpha_ok ? "true" : "false"},
                  {"delta", to_string(rep.delta)},
                  {"delta_nonvanishing", rep.delta_nonvanishing ? "true" : "false"},
                  {"certified_all_k", rep.delta_certified_all_k ? "true" : "false"},
                  {"pass", rep.pass() ? "true" : "false"}});
  } else if (fmt == Format::plain) {
    std::cout << (rep.pass() ? "PASS" : "FAIL") << " d=" << rep.d << " m=" << rep.m
              << " delta=" << to_string(rep.delta) << "\n";
  } else {
    ordered_json j;
    j["command"] = "mahler";
    j["instance"] = instance;
    if (instance == "F") {
      j["p"] = so.p;
      j["epsilon"] = so.epsilon;
      j["rule"] = so.rule;
    }
    j["alpha"] = alpha.to_string();
    j["d"] = rep.d;
    j["m"] = rep.m;
    j["k_max"] = rep.k_max;
    j["degree_ok"] = rep.degree_ok;
    j["alpha_ok"] = rep.alpha_ok;
    j["delta"] = to_string(rep.delta);
    j["delta_nonvanishing"] = rep.delta_nonvanishing;
    j["certified_all_k"] = rep.delta_certified_all_k;
    if (rep.vanishing_k) j["vanishing_k"] = *rep.vanishing_k;
    ordered_json samples = ordered_json::array();
    for (const auto& [k, val] : rep.delta_samples) {
      samples.push_back({{"k", k}, {"value", val.to_string()}});
    }
    j["delta_values"] = samples;
    j["pass"] = rep.pass();
    emit(j);
  }
  return rep.pass() ? kExitOk : kExitVerificationFailure;
}

int run_period(const CommonSequenceOpts& so, std::uint64_t k, std::uint64_t preperiod,
               std::uint64_t search_limit, Format fmt) {
  SequenceSpec spec = parse_sequence(so);
  PeriodSearchResult r = find_period_witness(spec, k, preperiod, search_limit);
  std::string status = r.status == PeriodSearchStatus::found
                           ? "found"
                           : (r.status == PeriodSearchStatus::not_found ? "not_found"
                                                                        : "no_negative_prime");
  if (fmt == Format::csv) {
    emit_csv_row({{"sequence", to_string(spec)},
                  {"k", std::to_string(k)},
                  {"preperiod", std::to_string(preperiod)},
                  {"search_limit", std::to_string(search_limit)},
                  {"status", status},
                  {"n1", r.witness ? std::to_string(r.witness->n1) : ""},
                  {"n2", r.witness ? std::to_string(r.witness->n2) : ""}});
  } else if (fmt == Format::plain) {
    if (r.witness) {
      std::cout << "witness n1=" << r.witness->n1 << " n2=" << r.witness->n2 << "\n";
    } else {
      std::cout << status << "\n";
    }
  } else {
    ordered_json j;
    j["command"] = "period";
    j["sequence"] = to_string(spec);
    j["k"] = k;
    j["preperiod"] = preperiod;
    j["search_limit"] = search_limit;
    j["status"] = status;
    if (r.witness) {
      j["n1"] = r.witness->n1;
      j["n2"] = r.witness->n2;
      j["value_n1"] = to_int(value_at(spec, r.witness->n1));
      j["value_n2"] = to_int(value_at(spec, r.witness->n2));
    }
    if (r.negative_prime != 0) j["negative_prime"] = r.negative_prime;
    emit(j);
  }
  return r.status == PeriodSearchStatus::found ? kExitOk : kExitVerificationFailure;
}

int run_stats(const CommonSequenceOpts& so, std::uint32_t n, std::uint32_t block_len, bool walk,
              Format fmt) {
  SequenceSpec spec = parse_sequence(so);
  if (walk) {
    auto w = partial_sum_walk(spec, n);
    std::cout << "n,partial_sum\n";
    for (std::uint32_t i = 1; i <= n; ++i) std::cout << i << ',' << w[i] << "\n";
    return kExitOk;
  }
  NormalityStats s = simple_normality_stats(spec, n);
  std::vector<std::uint64_t> blocks;
  if (block_len > 0) blocks = block_frequencies(spec, n, block_len);
  auto block_bits = [&](std::uint64_t b) {
    std::string bs(block_len, '0');
    for (std::uint32_t i = 0; i < block_len; ++i) {
      if (b & (std::uint64_t{1} << (block_len - 1 - i))) bs[i] = '1';
    }
    return bs;
  };
  if (fmt == Format::csv) {
    if (block_len > 0) {
      std::cout << "block,count\n";
      for (std::uint64_t b = 0; b < blocks.size(); ++b) {
        std::cout << block_bits(b) << ',' << blocks[b] << "\n";
      }
    } else {
      emit_csv_row({{"sequence", to_string(spec)},
                    {"n", std::to_string(n)},
                    {"plus_count", std::to_string(s.plus_count)},
                    {"plus_frequency", s.plus_frequency.to_string()},
                    {"partial_sum", std::to_string(s.partial_sum)},
                    {"max_abs_partial_sum", std::to_string(s.max_abs_partial_sum)}});
    }
  } else if (fmt == Format::plain) {
    std::cout << "n=" << n << " plus_frequency=" << s.plus_frequency.to_decimal_string(6)
              << " partial_sum=" << s.partial_sum << " max|sum|=" << s.max_abs_partial_sum << "\n";
  } else {
    ordered_json j;
    j["command"] = "stats";
    j["sequence"] = to_string(spec);
    j["n"] = n;
    j["plus_count"] = s.plus_count;
    j["plus_frequency"] = s.plus_frequency.to_string();
    j["plus_frequency_decimal"] = s.plus_frequency.to_decimal_string(8);
    j["partial_sum"] = s.partial_sum;
    j["max_abs_partial_sum"] = s.max_abs_partial_sum;
    if (block_len > 0) {
      ordered_json b = ordered_json::object();
      for (std::uint64_t i = 0; i < blocks.size(); ++i) b[block_bits(i)] = blocks[i];
      j["block_length"] = block_len;
      j["blocks"] = b;
    }
    emit(j);
  }
  return kExitOk;
}

int run_resultant(const std::string& instance, const CommonSequenceOpts& so, Format fmt) {
  MahlerInstance inst = [&] {
    if (instance == "G") return mahler_gaussian_instance(BigRational(1, 2));
    if (instance == "F") {
      return mahler_character_instance(so.p, sign_from_int(so.epsilon), parse_rule(so.rule),
                                       BigRational(1, 2));
    }
    throw std::invalid_argument("unknown instance '" + instance + "' (G|F)");
  }();
  PolyQ delta = resultant_in_u(inst.A, inst.B);
  auto poly_in_u_string = [](const PolyU& P) {
    std::string s;
    for (int i = P.degree(); i >= 0; --i) {
      PolyQ c = P.coeff(static_cast<std::size_t>(i));
      if (c.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c) + ")";
      if (i >= 1) s += " u";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  };
  if (fmt == Format::csv) {
    emit_csv_row({{"instance", instance},
                  {"A", poly_in_u_string(inst.A)},
                  {"B", poly_in_u_string(inst.B)},
                  {"delta", to_string(delta)}});
  } else if (fmt == Format::plain) {
    std::cout << "delta = " << to_string(delta) << "\n";
  } else {
    ordered_json j;
    j["command"] = "resultant";
    j["instance"] = instance;
    if (instance == "F") {
      j["p"] = so.p;
      j["epsilon"] = so.epsilon;
      j["rule"] = so.rule;
    }
    j["A"] = poly_in_u_string(inst.A);
    j["B"] = poly_in_u_string(inst.B);
    j["delta"] = to_string(delta);
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i <= delta.degree(); ++i) {
      coeffs.push_back(delta.coeff(static_cast<std::size_t>(i)).to_string());
    }
    j["delta_coeffs"] = coeffs;
    emit(j);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sequences, lacunary series, and certified digits"};
  app.require_subcommand(1);

  std::string format_s = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_s, "output format: json|csv|plain");
  };
  auto parse_format = [&]() {
    if (format_s == "json") return Format::json;
    if (format_s == "csv") return Format::csv;
    if (format_s == "plain") return Format::plain;
    throw std::invalid_argument("unknown format '" + format_s + "' (json|csv|plain)");
  };

  CommonSequenceOpts so;
  CommonFamilyOpts fo;
  auto add_sequence_opts = [&](CLI::App* sub) {
    sub->add_option("--sequence,-s", so.sequence, "liouville|gaussian|mod3|character");
    sub->add_option("--p", so.p, "odd prime (character only)");
    sub->add_option("--epsilon", so.epsilon, "+1 or -1: value at p (character only)");
    sub->add_option("--rule", so.rule, "legendre|trivial (character only)");
  };
  auto add_family_opts = [&](CLI::App* sub) {
    sub->add_option("--family,-f", fo.family, "G|T|F");
    sub->add_option("--p", fo.p, "odd prime (F only)");
    sub->add_option("--epsilon", fo.epsilon, "+1 or -1: sign at the base (F only)");
    sub->add_option("--rule", fo.rule, "legendre|trivial (F only)");
  };

  // seq
  auto* seq = app.add_subcommand("seq", "sequence values f(1..N)");
  std::uint32_t seq_limit = 32;
  add_sequence_opts(seq);
  seq->add_option("--limit,-n", seq_limit, "how many values")->required();
  add_format(seq);

  // digits
  auto* dig = app.add_subcommand("digits", "certified binary digits of a bit-number constant");
  std::string dig_constant = "gamma-bits";
  std::uint32_t dig_n = 21;
  std::string dig_format = "plain";
  dig->add_option("--constant,-c", dig_constant, "l|gamma-bits|tau-bits")->required();
  dig->add_option("--n,-n", dig_n, "number of binary digits")->required();
  dig->add_option("--format", dig_format, "output format: json|csv|plain (default plain)");

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a generating function at exact rational z");
  std::string ev_z = "1/2", ev_route = "closed";
  std::uint32_t ev_terms = 16;
  add_family_opts(ev);
  ev->add_option("--z", ev_z, "evaluation point as num/den, |z| < 1")->required();
  ev->add_option("--route", ev_route, "direct|closed")->required();
  ev->add_option("--terms,--levels", ev_terms, "series terms (direct) or levels (closed)");
  add_format(ev);

  // residual
  auto* res = app.add_subcommand("residual", "functional-equation or telescoping residual");
  std::string res_z = "1/2";
  std::uint32_t res_precision = 0, res_m = 0;
  add_family_opts(res);
  res->add_option("--z", res_z, "evaluation point as num/den, |z| < 1")->required();
  res->add_option("--precision", res_precision, "target bits (default CMGF_PRECISION_BITS or 128)");
  res->add_option("--telescope,-m", res_m, "telescoping depth m (omit for one-step equation)");
  add_format(res);

  // constants
  auto* con = app.add_subcommand("constants", "enclosures of the named constants");
  std::string con_name = "gamma-bits";
  std::uint32_t con_precision = 0, con_digits = 0;
  con->add_option("--constant,-c", con_name, "l|gamma-bits|g-half|tau-bits|t-half|phi")->required();
  con->add_option("--p", so.p, "odd prime (phi)");
  con->add_option("--epsilon", so.epsilon, "+1 or -1 (phi)");
  con->add_option("--rule", so.rule, "legendre|trivial (phi)");
  con->add_option("--precision", con_precision, "enclosure width target in bits");
  con->add_option("--digits", con_digits, "also emit this many certified binary digits");
  add_format(con);

  // mahler
  auto* mah = app.add_subcommand("mahler", "certify transcendence-theorem hypotheses");
  std::string mah_instance = "G", mah_alpha = "1/2";
  std::uint32_t mah_kmax = 64;
  mah->add_option("--instance,-i", mah_instance, "G|F")->required();
  mah->add_option("--p", so.p, "odd prime (F)");
  mah->add_option("--epsilon", so.epsilon, "+1 or -1 (F)");
  mah->add_option("--rule", so.rule, "legendre|trivial (F)");
  mah->add_option("--alpha", mah_alpha, "evaluation point as num/den");
  mah->add_option("--kmax", mah_kmax, "check Delta(alpha^(d^k)) for k <= kmax");
  add_format(mah);

  // period
  auto* per = app.add_subcommand("period", "refute eventual periodicity with a witness");
  std::uint64_t per_k = 1, per_m = 0, per_limit = 1000000;
  add_sequence_opts(per);
  per->add_option("--k", per_k, "claimed period")->required();
  per->add_option("--preperiod,-M", per_m, "claimed preperiod");
  per->add_option("--search-limit", per_limit, "largest index to consider");
  add_format(per);

  // stats
  auto* st = app.add_subcommand("stats", "descriptive bit statistics");
  std::uint32_t st_n = 1000, st_blocks = 0;
  bool st_walk = false;
  add_sequence_opts(st);
  st->add_option("--n,-n", st_n, "prefix length")->required();
  st->add_option("--blocks", st_blocks, "also count blocks of this bit length (1..16)");
  st->add_flag("--walk", st_walk, "emit the partial-sum walk as CSV");
  add_format(st);

  // resultant
  auto* rst = app.add_subcommand("resultant", "functional-equation resultant Delta(z)");
  std::string rst_instance = "G";
  rst->add_option("--instance,-i", rst_instance, "G|F")->required();
  rst->add_option("--p", so.p, "odd prime (F)");
  rst->add_option("--epsilon", so.epsilon, "+1 or -1 (F)");
  rst->add_option("--rule", so.rule, "legendre|trivial (F)");
  add_format(rst);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    std::uint32_t precision = default_precision();
    if (seq->parsed()) return run_seq(so, seq_limit, parse_format());
    if (dig->parsed()) {
      Format f = dig_format == "json" ? Format::json
                                      : (dig_format == "csv" ? Format::csv : Format::plain);
      return run_digits(dig_constant, so, dig_n, f);
    }
    if (ev->parsed()) return run_eval(fo, ev_z, ev_route, ev_terms, parse_format());
    if (res->parsed()) {
      return run_residual(fo, res_z, res_precision ? res_precision : precision, res_m,
                          parse_format());
    }
    if (con->parsed()) {
      return run_constants(con_name, so, con_precision ? con_precision : precision, con_digits,
                           parse_format());
    }
    if (mah->parsed()) return run_mahler(mah_instance, so, mah_alpha, mah_kmax, parse_format());
    if (per->parsed()) return run_period(so, per_k, per_m, per_limit, parse_format());
    if (st->parsed()) return run_stats(so, st_n, st_blocks, st_walk, parse_format());
    if (rst->parsed()) return run_resultant(rst_instance, so, parse_format());
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}
