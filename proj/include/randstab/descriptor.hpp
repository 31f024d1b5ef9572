#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "randstab/discrete.hpp"
#include "randstab/families.hpp"

namespace randstab {

// Descriptors are the textual interface shared by the CLI, reports, and
// tests. Grammar:
//
//   tag:key=value,key=value,...
//
// Transform tags (Laplace):  gamma, ml, plinnik, sml, gensml, pstable, sstable
// Transform tags (char.fn):  linnik, glinnik, salaplace, gensalaplace
// Compounder tags (pgf):     harris, geometric1, sibuya, degenerate, bshift
// Discrete tags:             dstable, dml, dlinnik, dgensml, sibub
//
// Two composite forms exist for discrete laws: "d:<laplace descriptor>" is
// the substitution t -> phi(1-t), and a "|thin=c" suffix applies binomial
// thinning at rate c.
//
// Keys per tag:
//   gamma:beta=            ml:alpha=,lambda=       plinnik:alpha=,lambda=,beta=
//   sml:lambda=,alpha=,b=[,eps=]                   gensml:lambda=,alpha=,b=,beta=[,eps=]
//   pstable:alpha=,lambda=                         sstable:lambda=,alpha=,b=[,eps=]
//   linnik:alpha=,lambda=                          glinnik:alpha=,theta=,nu=[,lambda=]
//   salaplace:lambda=,alpha=,b=[,eps=]             gensalaplace:lambda=,alpha=,b=,nu=[,eps=]
//   harris:a=,k=    geometric1:p=    sibuya:nu=    degenerate:k=    bshift:lambda=
//   dstable:lambda=,alpha=    dml:lambda=,alpha=   dlinnik:lambda=,alpha=,beta=
//   dgensml:lambda=,alpha=,b=,beta=[,eps=]         sibub:delta=,nu=

class DescriptorError : public std::invalid_argument {
 public:
  DescriptorError(const std::string& token, const std::string& what)
      : std::invalid_argument("descriptor error at '" + token + "': " + what), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Parsers. Each throws DescriptorError carrying the offending token when the
// text does not belong to its grammar.
TransformFamily parse_transform(const std::string& text);
LtFamily parse_lt(const std::string& text);
CfFamily parse_cf(const std::string& text);
PgfFamily parse_pgf(const std::string& text);
DiscretePgf parse_discrete(const std::string& text);

// Canonical text for each family; parse(format(x)) reproduces x.
std::string format_descriptor(const LtFamily& f);
std::string format_descriptor(const CfFamily& f);
std::string format_descriptor(const PgfFamily& f);
std::string format_descriptor(const DiscretePgf& f);
std::string format_descriptor(const TransformFamily& f);

// Shortest round-trip decimal text for a double.
std::string format_number(double x);

}  // namespace randstab
