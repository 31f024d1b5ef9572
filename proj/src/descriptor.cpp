#include "randstab/descriptor.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace randstab {

namespace {

double parse_number(const std::string& token, const std::string& text) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last)
    throw DescriptorError(token, "'" + text + "' is not a number");
  return x;
}

long parse_integer(const std::string& token, const std::string& text) {
  const double x = parse_number(token, text);
  const double rounded = std::nearbyint(x);
  if (std::abs(x - rounded) > 1e-9)
    throw DescriptorError(token, "'" + text + "' is not an integer");
  return static_cast<long>(rounded);
}

// A descriptor split into its tag and key=value pairs, consumed key by key
// so leftovers can be reported as unknown parameters.
struct ParamList {
  std::string descriptor;
  std::string tag;
  std::map<std::string, std::string> kv;

  double take(const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw DescriptorError(descriptor, "missing parameter '" + key + "'");
    const double x = parse_number(key + "=" + it->second, it->second);
    kv.erase(it);
    return x;
  }

  long take_integer(const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw DescriptorError(descriptor, "missing parameter '" + key + "'");
    const long x = parse_integer(key + "=" + it->second, it->second);
    kv.erase(it);
    return x;
  }

  double take_or(const std::string& key, double fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const double x = parse_number(key + "=" + it->second, it->second);
    kv.erase(it);
    return x;
  }

  void finish() const {
    if (!kv.empty())
      throw DescriptorError(kv.begin()->first, "unknown parameter for '" + tag + "'");
  }
};

ParamList split_params(const std::string& text) {
  ParamList out;
  out.descriptor = text;
  const auto colon = text.find(':');
  out.tag = text.substr(0, colon);
  if (out.tag.empty()) throw DescriptorError(text, "missing family tag");
  if (colon == std::string::npos) return out;
  const std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string item =
        rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw DescriptorError(item, "expected key=value");
      const std::string key = item.substr(0, eq);
      if (out.kv.count(key)) throw DescriptorError(item, "duplicate parameter");
      out.kv[key] = item.substr(eq + 1);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool is_lt_tag(const std::string& tag) {
  return tag == "gamma" || tag == "ml" || tag == "plinnik" || tag == "sml" ||
         tag == "gensml" || tag == "pstable" || tag == "sstable";
}

bool is_cf_tag(const std::string& tag) {
  return tag == "linnik" || tag == "glinnik" || tag == "salaplace" ||
         tag == "gensalaplace";
}

bool is_pgf_tag(const std::string& tag) {
  return tag == "harris" || tag == "geometric1" || tag == "sibuya" ||
         tag == "degenerate" || tag == "bshift";
}

bool is_discrete_tag(const std::string& tag) {
  return tag == "dstable" || tag == "dml" || tag == "dlinnik" || tag == "dgensml" ||
         tag == "sibub";
}

ScaleFunction take_log_periodic(ParamList& p) {
  const double lambda = p.take("lambda");
  const double alpha = p.take("alpha");
  const double b = p.take("b");
  const double eps = p.take_or("eps", 0.05);
  return ScaleFunction::log_periodic(lambda, alpha, b, eps);
}

}  // namespace

LtFamily parse_lt(const std::string& text) {
  ParamList p = split_params(text);
  if (!is_lt_tag(p.tag))
    throw DescriptorError(p.tag, "not a laplace transform family tag");
  if (p.tag == "gamma") {
    const double beta = p.take("beta");
    p.finish();
    return LtFamily::gamma(beta);
  }
  if (p.tag == "ml") {
    const double alpha = p.take("alpha");
    const double lambda = p.take("lambda");
    p.finish();
    return LtFamily::mittag_leffler(alpha, lambda);
  }
  if (p.tag == "plinnik") {
    const double alpha = p.take("alpha");
    const double lambda = p.take("lambda");
    const double beta = p.take("beta");
    p.finish();
    return LtFamily::positive_linnik(alpha, lambda, beta);
  }
  if (p.tag == "sml") {
    const ScaleFunction psi = take_log_periodic(p);
    p.finish();
    return LtFamily::semi_ml(psi);
  }
  if (p.tag == "gensml") {
    const double beta = p.take("beta");
    const ScaleFunction psi = take_log_periodic(p);
    p.finish();
    return LtFamily::gen_semi_ml(psi, beta);
  }
  if (p.tag == "pstable") {
    const double alpha = p.take("alpha");
    const double lambda = p.take("lambda");
    p.finish();
    return LtFamily::positive_stable(alpha, lambda);
  }
  const ScaleFunction psi = take_log_periodic(p);
  p.finish();
  return LtFamily::semi_stable(psi);
}

CfFamily parse_cf(const std::string& text) {
  ParamList p = split_params(text);
  if (!is_cf_tag(p.tag))
    throw DescriptorError(p.tag, "not a characteristic function family tag");
  if (p.tag == "linnik") {
    const double alpha = p.take("alpha");
    const double lambda = p.take("lambda");
    p.finish();
    return CfFamily::linnik(alpha, lambda);
  }
  if (p.tag == "glinnik") {
    const double alpha = p.take("alpha");
    const double theta = p.take("theta");
    const double nu = p.take("nu");
    const double lambda = p.take_or("lambda", 1.0);
    p.finish();
    return CfFamily::generalized_linnik(alpha, theta, nu, lambda);
  }
  if (p.tag == "salaplace") {
    const ScaleFunction psi = take_log_periodic(p);
    p.finish();
    return CfFamily::semi_alpha_laplace(psi);
  }
  const double nu = p.take("nu");
  const ScaleFunction psi = take_log_periodic(p);
  p.finish();
  return CfFamily::gen_semi_alpha_laplace(psi, nu);
}

TransformFamily parse_transform(const std::string& text) {
  ParamList probe = split_params(text);
  if (is_lt_tag(probe.tag)) return parse_lt(text);
  if (is_cf_tag(probe.tag)) return parse_cf(text);
  throw DescriptorError(probe.tag, "unknown transform family tag");
}

PgfFamily parse_pgf(const std::string& text) {
  ParamList p = split_params(text);
  if (!is_pgf_tag(p.tag))
    throw DescriptorError(p.tag, "not a compounder family tag");
  if (p.tag == "harris") {
    const double a = p.take("a");
    const long k = p.take_integer("k");
    p.finish();
    return PgfFamily::harris(a, k);
  }
  if (p.tag == "geometric1") {
    const double q = p.take("p");
    p.finish();
    return PgfFamily::geometric1(q);
  }
  if (p.tag == "sibuya") {
    const double nu = p.take("nu");
    p.finish();
    return PgfFamily::sibuya(nu);
  }
  if (p.tag == "degenerate") {
    const long k = p.take_integer("k");
    p.finish();
    return PgfFamily::degenerate(k);
  }
  const double lambda = p.take("lambda");
  p.finish();
  return PgfFamily::bernoulli_shift(lambda);
}

DiscretePgf parse_discrete(const std::string& text) {
  const auto bar = text.rfind('|');
  if (bar != std::string::npos) {
    const std::string suffix = text.substr(bar + 1);
    if (suffix.rfind("thin=", 0) != 0)
      throw DescriptorError(suffix, "expected thin=c after '|'");
    const double c = parse_number(suffix, suffix.substr(5));
    return d_type_transform(parse_discrete(text.substr(0, bar)), c);
  }
  if (text.rfind("d:", 0) == 0) return discretize(parse_lt(text.substr(2)));

  ParamList p = split_params(text);
  if (is_pgf_tag(p.tag)) return DiscretePgf::from_pgf(parse_pgf(text));
  if (!is_discrete_tag(p.tag))
    throw DescriptorError(p.tag, "not a discrete law tag");
  if (p.tag == "dstable") {
    const double lambda = p.take("lambda");
    const double alpha = p.take("alpha");
    p.finish();
    return DiscretePgf::discrete_stable(lambda, alpha);
  }
  if (p.tag == "dml") {
    const double lambda = p.take("lambda");
    const double alpha = p.take("alpha");
    p.finish();
    return DiscretePgf::discrete_ml(lambda, alpha);
  }
  if (p.tag == "dlinnik") {
    const double lambda = p.take("lambda");
    const double alpha = p.take("alpha");
    const double beta = p.take("beta");
    p.finish();
    return DiscretePgf::discrete_linnik(lambda, alpha, beta);
  }
  if (p.tag == "dgensml") {
    const double beta = p.take("beta");
    const ScaleFunction psi = take_log_periodic(p);
    p.finish();
    return DiscretePgf::discrete_gen_sml(psi, beta);
  }
  const double delta = p.take("delta");
  const double nu = p.take("nu");
  p.finish();
  return DiscretePgf::sibuya_bernoulli(delta, nu);
}

std::string format_number(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

std::string fmt(double x) { return format_number(x); }

// Log-periodic parameters in canonical key order.
std::string psi_params(const ScaleFunction& psi) {
  return "lambda=" + fmt(psi.lambda()) + ",alpha=" + fmt(psi.alpha()) +
         ",b=" + fmt(psi.b()) + ",eps=" + fmt(psi.eps());
}

}  // namespace

std::string format_descriptor(const LtFamily& f) {
  switch (f.tag()) {
    case LtFamily::Tag::kGamma:
      return "gamma:beta=" + fmt(f.beta());
    case LtFamily::Tag::kMittagLeffler:
      return "ml:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda());
    case LtFamily::Tag::kPositiveLinnik:
      return "plinnik:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda()) +
             ",beta=" + fmt(f.beta());
    case LtFamily::Tag::kSemiML:
      if (f.psi().is_pure_power())
        return "ml:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda());
      return "sml:" + psi_params(f.psi());
    case LtFamily::Tag::kGenSemiML:
      if (f.psi().is_pure_power())
        return "plinnik:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda()) +
               ",beta=" + fmt(f.beta());
      return "gensml:" + psi_params(f.psi()) + ",beta=" + fmt(f.beta());
    case LtFamily::Tag::kPositiveStable:
      return "pstable:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda());
    case LtFamily::Tag::kSemiStable:
      if (f.psi().is_pure_power())
        return "pstable:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda());
      return "sstable:" + psi_params(f.psi());
  }
  throw std::logic_error("unreachable");
}

std::string format_descriptor(const CfFamily& f) {
  switch (f.tag()) {
    case CfFamily::Tag::kLinnik:
      return "linnik:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda());
    case CfFamily::Tag::kGeneralizedLinnik:
      return "glinnik:alpha=" + fmt(f.alpha()) + ",theta=" + fmt(f.theta()) +
             ",nu=" + fmt(f.nu()) + ",lambda=" + fmt(f.lambda());
    case CfFamily::Tag::kSemiAlphaLaplace:
      if (f.psi().is_pure_power())
        return "linnik:alpha=" + fmt(f.alpha()) + ",lambda=" + fmt(f.lambda());
      return "salaplace:" + psi_params(f.psi());
    case CfFamily::Tag::kGenSemiAlphaLaplace:
      if (f.psi().is_pure_power())
        return "glinnik:alpha=" + fmt(f.alpha()) + ",theta=0,nu=" + fmt(f.nu()) +
               ",lambda=" + fmt(f.lambda());
      return "gensalaplace:" + psi_params(f.psi()) + ",nu=" + fmt(f.nu());
  }
  throw std::logic_error("unreachable");
}

std::string format_descriptor(const PgfFamily& f) {
  switch (f.tag()) {
    case PgfFamily::Tag::kHarris:
      return "harris:a=" + fmt(f.a()) + ",k=" + std::to_string(f.k());
    case PgfFamily::Tag::kGeometric1:
      return "geometric1:p=" + fmt(f.p());
    case PgfFamily::Tag::kSibuya:
      return "sibuya:nu=" + fmt(f.nu());
    case PgfFamily::Tag::kDegenerate:
      return "degenerate:k=" + std::to_string(f.k());
    case PgfFamily::Tag::kBernoulliShift:
      return "bshift:lambda=" + fmt(f.lambda());
  }
  throw std::logic_error("unreachable");
}

std::string format_descriptor(const DiscretePgf& f) {
  std::string base;
  switch (f.form()) {
    case DiscretePgf::Form::kDiscreteStable:
      base = "dstable:lambda=" + fmt(f.lambda()) + ",alpha=" + fmt(f.alpha());
      break;
    case DiscretePgf::Form::kDiscreteML:
      base = "dml:lambda=" + fmt(f.lambda()) + ",alpha=" + fmt(f.alpha());
      break;
    case DiscretePgf::Form::kDiscreteLinnik:
      base = "dlinnik:lambda=" + fmt(f.lambda()) + ",alpha=" + fmt(f.alpha()) +
             ",beta=" + fmt(f.beta());
      break;
    case DiscretePgf::Form::kDiscreteGenSML:
      if (f.psi().is_pure_power())
        base = "dlinnik:lambda=" + fmt(f.psi().lambda()) +
               ",alpha=" + fmt(f.psi().alpha()) + ",beta=" + fmt(f.beta());
      else
        base = "dgensml:" + psi_params(f.psi()) + ",beta=" + fmt(f.beta());
      break;
    case DiscretePgf::Form::kSibuyaBernoulli:
      base = "sibub:delta=" + fmt(f.delta()) + ",nu=" + fmt(f.nu());
      break;
    case DiscretePgf::Form::kLtAnalogue:
      base = "d:" + format_descriptor(*f.source_lt());
      break;
    case DiscretePgf::Form::kNativePgf:
      base = format_descriptor(*f.native_pgf());
      break;
  }
  if (f.thin_factor() != 1.0) base += "|thin=" + fmt(f.thin_factor());
  return base;
}

std::string format_descriptor(const TransformFamily& f) {
  if (std::holds_alternative<LtFamily>(f)) return format_descriptor(std::get<LtFamily>(f));
  return format_descriptor(std::get<CfFamily>(f));
}

}  // namespace randstab
