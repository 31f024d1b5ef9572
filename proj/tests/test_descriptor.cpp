#include <doctest.h>

#include <string>

#include "randstab/descriptor.hpp"
#include "randstab/grid.hpp"

using namespace randstab;

namespace {

// parse(format(x)) must reproduce x; compare by formatting again.
void check_lt_round_trip(const std::string& text) {
  const LtFamily f = parse_lt(text);
  const std::string canonical = format_descriptor(f);
  const LtFamily g = parse_lt(canonical);
  CHECK(format_descriptor(g) == canonical);
}

}  // namespace

TEST_CASE("laplace descriptor round trips") {
  check_lt_round_trip("gamma:beta=0.5");
  check_lt_round_trip("ml:alpha=0.85,lambda=1");
  check_lt_round_trip("plinnik:alpha=0.5,lambda=2,beta=0.7");
  check_lt_round_trip("sml:lambda=1,alpha=0.6,b=0.25");
  check_lt_round_trip("gensml:lambda=1,alpha=0.6,b=0.25,beta=0.5,eps=0.1");
  check_lt_round_trip("pstable:alpha=0.5,lambda=1");
  check_lt_round_trip("sstable:lambda=1,alpha=0.6,b=0.25");
}

TEST_CASE("descriptor key order does not matter") {
  const LtFamily a = parse_lt("ml:alpha=0.85,lambda=2");
  const LtFamily b = parse_lt("ml:lambda=2,alpha=0.85");
  CHECK(format_descriptor(a) == format_descriptor(b));
}

TEST_CASE("characteristic and compounder descriptors") {
  CHECK(format_descriptor(parse_cf("linnik:alpha=1,lambda=1")) ==
        "linnik:alpha=1,lambda=1");
  CHECK(format_descriptor(parse_cf("glinnik:alpha=0.5,theta=0.3,nu=0.5")) ==
        "glinnik:alpha=0.5,theta=0.3,nu=0.5,lambda=1");
  CHECK(format_descriptor(parse_pgf("harris:a=3,k=2")) == "harris:a=3,k=2");
  CHECK(format_descriptor(parse_pgf("geometric1:p=0.25")) == "geometric1:p=0.25");
  CHECK(format_descriptor(parse_pgf("degenerate:k=4")) == "degenerate:k=4");
  CHECK(format_descriptor(parse_pgf("bshift:lambda=0.7")) == "bshift:lambda=0.7");
}

TEST_CASE("pure-power semi forms collapse to their closed tags") {
  // A log-periodic exponent keeps its tag even at eps=0; only a pure-power
  // exponent collapses, because only then is the identification exact by
  // construction.
  const LtFamily sml = parse_lt("sml:lambda=2,alpha=0.6,b=0.25,eps=0");
  CHECK(format_descriptor(sml) == "sml:lambda=2,alpha=0.6,b=0.25,eps=0");
  const LtFamily ml = LtFamily::semi_ml(ScaleFunction::pure_power(2.0, 0.6));
  CHECK(format_descriptor(ml) == "ml:alpha=0.6,lambda=2");
  const LtFamily plin =
      LtFamily::gen_semi_ml(ScaleFunction::pure_power(2.0, 0.6), 0.7);
  CHECK(format_descriptor(plin) == "plinnik:alpha=0.6,lambda=2,beta=0.7");
  const LtFamily pst = LtFamily::semi_stable(ScaleFunction::pure_power(1.0, 0.5));
  CHECK(format_descriptor(pst) == "pstable:alpha=0.5,lambda=1");
}

TEST_CASE("discrete descriptors, substitution prefix and thinning suffix") {
  CHECK(format_descriptor(parse_discrete("dml:lambda=1,alpha=0.85")) ==
        "dml:lambda=1,alpha=0.85");
  CHECK(format_descriptor(parse_discrete("sibub:delta=0.8,nu=0.5")) ==
        "sibub:delta=0.8,nu=0.5");

  // d-prefix builds the integer analogue of the Laplace family; closed power
  // forms land on their named discrete counterparts.
  CHECK(format_descriptor(parse_discrete("d:pstable:alpha=0.85,lambda=0.9")) ==
        "dstable:lambda=0.9,alpha=0.85");
  CHECK(format_descriptor(parse_discrete("d:ml:alpha=0.85,lambda=1")) ==
        "dml:lambda=1,alpha=0.85");
  CHECK(format_descriptor(parse_discrete("d:gamma:beta=0.5")) == "d:gamma:beta=0.5");

  // Thinning folds into closed-form parameters: lambda -> lambda * c^alpha.
  const DiscretePgf thinned = parse_discrete("dstable:lambda=1,alpha=0.5|thin=0.25");
  CHECK(format_descriptor(thinned) == "dstable:lambda=0.5,alpha=0.5");

  // Where no fold exists the factor stays in the descriptor.
  const DiscretePgf carried = parse_discrete("d:gamma:beta=0.5|thin=0.25");
  CHECK(format_descriptor(carried) == "d:gamma:beta=0.5|thin=0.25");

  // A native compounder is also a discrete law and thins like one.
  const DiscretePgf native = parse_discrete("geometric1:p=0.5");
  CHECK(format_descriptor(native) == "geometric1:p=0.5");
}

TEST_CASE("descriptor errors carry the offending token") {
  const auto token_of = [](const std::string& text) {
    try {
      parse_lt(text);
    } catch (const DescriptorError& e) {
      return e.token();
    }
    return std::string("<no error>");
  };
  CHECK(token_of("gamma:beta=abc") == "beta=abc");
  CHECK(token_of("nosuch:beta=1") == "nosuch");
  CHECK(token_of("gamma:beta=1,extra=2") == "extra");
  CHECK(token_of("gamma") == "gamma");

  CHECK_THROWS_AS(parse_pgf("harris:a=2"), DescriptorError);           // missing k
  CHECK_THROWS_AS(parse_pgf("harris:a=2,k=1.5"), DescriptorError);     // fractional k
  CHECK_THROWS_AS(parse_discrete("dml:lambda=1"), DescriptorError);    // missing alpha
  CHECK_THROWS_AS(parse_discrete("dml:lambda=1,alpha=0.5|thin=x"), DescriptorError);
  CHECK_THROWS_AS(parse_discrete("dml:lambda=1,alpha=0.5|chop=0.5"), DescriptorError);
  CHECK_THROWS_AS(parse_transform("harris:a=2,k=1"), DescriptorError);
  CHECK_THROWS_AS(parse_lt("ml:alpha=0.5,alpha=0.6,lambda=1"), DescriptorError);
}

TEST_CASE("numbers format with shortest round-trip text") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_number(1e-12) == "1e-12");
}
