#pragma once

#include <random>
#include <string>
#include <vector>

#include "sencalc/cli/document.hpp"
#include "sencalc/cli/targets.hpp"
#include "sencalc/errors.hpp"
#include "sencalc/exactalg/scalar.hpp"
#include "sencalc/senhom/report.hpp"

namespace sencalc::cli::detail {

// Uniform draws from a fixed-seed generator, identical on every platform.
class Draw {
  public:
    explicit Draw(std::uint32_t seed) : rng_(seed) {}
    long operator()(long low, long high) { return low + static_cast<long>(rng_() % static_cast<std::uint32_t>(high - low + 1)); }

  private:
    std::mt19937 rng_;
};

// Decimal form, shortened to leading and trailing digits past 60 digits.
std::string abbreviate(const Integer& a);
Json integer_json(const Integer& a);
Json integers_json(const std::vector<Integer>& values);
std::string tuple_string(const std::vector<Integer>& values);
// "3, -3, -24" -> {3, -3, -24}; throws InvalidInput.
std::vector<Integer> parse_integers(const std::string& text);

// Runs body on a fresh check. InvalidInput propagates as a usage error, Unsupported
// marks the check skipped and any other library error fails it with the message.
template <class Body>
Check run_check(std::string name, Body&& body) {
    Check check;
    check.name = std::move(name);
    try {
        body(check);
    } catch (const InvalidInput&) {
        throw;
    } catch (const Unsupported& e) {
        check.status = Status::skipped;
        check.note = e.what();
    } catch (const Error& e) {
        check.fail(e.what());
    }
    return check;
}

senhom::DegreeHomology group(int degree, std::size_t free_rank, const std::vector<int>& exponents, long p);
int total_exponent(const senhom::DegreeHomology& h, long p);
std::string describe(const senhom::DegreeHomology& h);
void expect_group(Check& check, const senhom::HomologyReport& report, const senhom::DegreeHomology& expected);
// Compares a `degree:group; ...` table entry by entry for degrees within the report.
void expect_table(Check& check, const senhom::HomologyReport& report, const Targets& targets, const std::string& key);
void attach(Check& check, const senhom::HomologyReport& report, const std::string& field = "homology");

Check gabber_check(long p, int length, const Targets& targets);
Check solve_frobenius_check(long p, int length, const Targets& targets);
Check pn_vanishing_check(long p, int length, int n_max);
Check frobenius_of_p_check(long p, int length);
Check cartier_character_check(long p, int samples);
Check dwork_check(int degree_bound, int instances);

Check nseries_check(const std::string& kind, long p, int height, long m, int degree_bound, const Targets& targets);
Check q_identity_check(int n_max);
Check honda_check(long p, int height, int degree_bound);
Check right_unit_check(long p, const Targets& targets);
Check b4_check(const Targets& targets);
Check fderham_check(const std::string& kind, long p, int precision, int truncation, int weight_bound);

Check bokstedt_check(long p, const std::string& variant, int degree_bound, const Targets& targets);
Check cmn_check(long p, int n, int degree_bound, const Targets& targets);
Check perfectoid_check(long p, int degree_bound, const Targets& targets);
Check zpn_check(long p, int n, int degree_bound, const Targets& targets);
Check omega2yn_check(long p, int n, int degree_bound, const Targets& targets);
Check zpn_level_independence_check(long p, int degree_bound);
Check dvr_check(long p, int precision, const std::string& eisenstein, int degree_bound, const Targets& targets);

Check psi_check(long p, int n, long m, const Targets& targets);
Check psi_table_check(long p, int n, long m_max);
Check psi_tensor_check(long p, int n, int pairs);
Check weyl_check(long p, int n, int monomial_bound);
Check delta_check(long p, int n, int truncation, int precision);

}  // namespace sencalc::cli::detail
