#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "mg2/bs.hpp"
#include "mg2/congruence.hpp"
#include "mg2/madic.hpp"
#include "mg2/space.hpp"
#include "mg2/word.hpp"
#include "mg2/wreath.hpp"

using json = nlohmann::ordered_json;
using namespace mg2;

namespace {

// Error with a fixed process exit code: 1 usage, 2 cross-check failure,
// 3 cap exceeded.
struct CliError : std::runtime_error {
	int code;
	CliError(int code_, const std::string &msg)
	    : std::runtime_error(msg), code(code_)
	{
	}
};

constexpr std::int64_t kHardLengthCap = 20;
constexpr std::int64_t kWarnLength = 14;
constexpr std::int64_t kMaxGridCells = 100'000;

struct Range {
	std::int64_t lo = 0;
	std::int64_t hi = 0;
};

Range parse_range(const std::string &text, const char *flag)
{
	auto bad = [&] {
		return CliError(
		    1, fmt::format("bad value '{}' for {}: expected INT or LO..HI",
		                   text, flag));
	};
	try
	{
		std::size_t sep = text.find("..");
		std::size_t used = 0;
		if (sep == std::string::npos)
		{
			std::int64_t v = std::stoll(text, &used);
			if (used != text.size())
				throw bad();
			return {v, v};
		}
		std::string lo = text.substr(0, sep), hi = text.substr(sep + 2);
		Range r;
		r.lo = std::stoll(lo, &used);
		if (used != lo.size())
			throw bad();
		r.hi = std::stoll(hi, &used);
		if (used != hi.size())
			throw bad();
		if (r.hi < r.lo)
			throw CliError(
			    1, fmt::format("empty range '{}' for {}", text, flag));
		return r;
	}
	catch (const std::logic_error &)
	{
		throw bad();
	}
}

// Expands a range, dropping values below the absolute-value floor with a
// note on stderr, so grids over symmetric ranges like -4..4 stay valid.
std::vector<std::int64_t> range_values(const std::string &text,
                                       const char *flag, const char *sub,
                                       std::int64_t min_abs)
{
	Range r = parse_range(text, flag);
	std::vector<std::int64_t> out;
	for (std::int64_t v = r.lo; v <= r.hi; ++v)
	{
		std::int64_t av = v < 0 ? -v : v;
		if (av < min_abs)
		{
			std::cerr << fmt::format(
			    "{}: skipping {}={} (|value| >= {} required here)\n", sub,
			    flag, v, min_abs);
			continue;
		}
		out.push_back(v);
	}
	if (out.empty())
		throw CliError(1, fmt::format("{}: no usable values left in {} {}",
		                              sub, flag, text));
	return out;
}

void check_scan_length(std::int64_t max_len, const char *sub)
{
	if (max_len < 1)
		throw CliError(1, fmt::format("{}: scan length must be >= 1", sub));
	if (max_len > kHardLengthCap)
		throw CliError(
		    3, fmt::format("{}: scan length {} exceeds the hard cap {}", sub,
		                   max_len, kHardLengthCap));
	if (max_len > kWarnLength)
		std::cerr << fmt::format(
		    "{}: scanning up to length {} visits ~{} words per length; "
		    "expect a long run\n",
		    sub, max_len, reduced_word_count(static_cast<int>(max_len)));
}

std::string bstr(bool v)
{
	return v ? "true" : "false";
}

std::string csv_table(const std::vector<std::string> &header,
                      const std::vector<std::vector<std::string>> &rows)
{
	std::string out = fmt::format("{}\n", fmt::join(header, ","));
	for (const auto &row : rows)
		out += fmt::format("{}\n", fmt::join(row, ","));
	return out;
}

std::string dump(const json &doc)
{
	return doc.dump(2) + "\n";
}

void emit(const std::string &text, const std::string &out_path)
{
	if (out_path.empty())
	{
		std::cout << text;
		return;
	}
	std::ofstream f(out_path, std::ios::binary);
	if (!f)
		throw CliError(1,
		               fmt::format("cannot open output file '{}'", out_path));
	f << text;
}

std::int64_t checked_int64(const mpz_class &v, const std::string &what)
{
	if (!v.fits_slong_p())
		throw CliError(3, fmt::format("{} does not fit a 64-bit integer ({})",
		                              what, v.get_str()));
	return v.get_si();
}

json madic_json(const MadicInt &x)
{
	return json{{"m", x.base()},
	            {"H", x.precision()},
	            {"residue", checked_int64(x.residue(), "limit residue")}};
}

json disagreement_json(const DisagreementResult &r)
{
	if (r.found())
		return json{{"kind", "found"},
		            {"lambda", r.lambda},
		            {"witness", r.witness->str()}};
	return json{{"kind", "agree_up_to"}, {"L", r.searched_up_to}};
}

// Cells kind, value, witness for the CSV flattening of a disagreement row.
std::vector<std::string> disagreement_cells(const DisagreementResult &r)
{
	if (r.found())
		return {"found", fmt::format("{}", r.lambda), r.witness->str()};
	return {"agree_up_to", fmt::format("{}", r.searched_up_to), ""};
}

json with_front_keys(std::vector<std::pair<std::string, json>> front,
                     const json &rest)
{
	json out = json::object();
	for (auto &[k, v] : front)
		out[k] = std::move(v);
	for (auto it = rest.begin(); it != rest.end(); ++it)
		out[it.key()] = it.value();
	return out;
}

struct CommonOpts {
	std::string format;   // "", "json", "csv"
	std::string out_path; // "" = stdout
	bool verbose = false;
};

bool want_json(const CommonOpts &c, const char *default_format)
{
	const std::string &f = c.format.empty() ? default_format : c.format;
	return f == "json";
}

// ---- reduce ---------------------------------------------------------------

int run_reduce(const CommonOpts &c, const std::string &group,
               const std::string &word_text)
{
	Word w = Word::parse(word_text);
	json doc{{"group", group}, {"word", w.str()}};
	std::vector<std::string> header{"group", "word"};
	std::vector<std::string> cells{group, w.str()};

	if (group == "wreath")
	{
		WreathElement e = eval_wreath(w);
		json support = json::array();
		std::string flat;
		for (const auto &[pos, coeff] : e.support)
		{
			support.push_back(json::array({pos, coeff}));
			flat +=
			    fmt::format("{}{}:{}", flat.empty() ? "" : ";", pos, coeff);
		}
		doc["shift"] = e.shift;
		doc["support"] = support;
		doc["trivial"] = e.is_identity();
		header.insert(header.end(), {"shift", "support", "trivial"});
		cells.insert(cells.end(), {fmt::format("{}", e.shift), flat,
		                           bstr(e.is_identity())});
	}
	else if (group == "free")
	{
		doc["reduced"] = w.str();
		doc["trivial"] = w.empty();
		header.insert(header.end(), {"reduced", "trivial"});
		cells.insert(cells.end(), {w.str(), bstr(w.empty())});
	}
	else
	{
		make_oracle(group); // validates the bs:M,N shape or rejects
		std::size_t pos = group.find(':') + 1;
		std::size_t comma = group.find(',', pos);
		BSGroup G(std::stoll(group.substr(pos, comma - pos)),
		          std::stoll(group.substr(comma + 1)));
		Word reduced = to_word(britton_reduce(G, w));
		bool trivial = is_identity(G, w);
		doc["reduced"] = reduced.str();
		doc["trivial"] = trivial;
		header.insert(header.end(), {"reduced", "trivial"});
		cells.insert(cells.end(), {reduced.str(), bstr(trivial)});
	}

	emit(want_json(c, "json") ? dump(doc) : csv_table(header, {cells}),
	     c.out_path);
	return 0;
}

// ---- girth ----------------------------------------------------------------

int run_girth(const CommonOpts &c, const std::string &m_range,
              const std::string &n_range)
{
	auto ms = range_values(m_range, "--m", "girth", 1);
	auto ns = range_values(n_range, "--n", "girth", 1);

	std::vector<std::vector<std::string>> rows;
	json arr = json::array();
	bool all_match = true;
	for (std::int64_t m : ms)
	{
		for (std::int64_t n : ns)
		{
			std::int64_t formula = girth_formula(m, n);
			if (formula > kHardLengthCap)
				throw CliError(
				    3, fmt::format("girth: search length {} for bs:{},{} "
				                   "exceeds the hard cap {}",
				                   formula, m, n, kHardLengthCap));
			GirthResult g = girth_bruteforce(bs_oracle(m, n), formula);
			bool match = g.girth.has_value() && *g.girth == formula;
			all_match = all_match && match;
			std::string found =
			    g.girth ? fmt::format("{}", *g.girth) : std::string();
			rows.push_back({fmt::format("{}", m), fmt::format("{}", n),
			                fmt::format("{}", formula), found, bstr(match)});
			arr.push_back(
			    json{{"m", m},
			         {"n", n},
			         {"formula", formula},
			         {"bruteforce", g.girth ? json(*g.girth) : json(nullptr)},
			         {"match", match}});
		}
	}

	emit(want_json(c, "csv")
	         ? dump(arr)
	         : csv_table({"m", "n", "formula", "bruteforce", "match"}, rows),
	     c.out_path);
	return all_match ? 0 : 2;
}

// ---- compare / relations --------------------------------------------------

int run_compare(const CommonOpts &c, const std::string &g1,
                const std::string &g2, std::int64_t max_len)
{
	check_scan_length(max_len, "compare");
	DisagreementResult r =
	    first_disagreement(make_oracle(g1), make_oracle(g2), max_len);
	if (want_json(c, "json"))
		emit(dump(disagreement_json(r)), c.out_path);
	else
		emit(csv_table({"kind", "value", "witness"}, {disagreement_cells(r)}),
		     c.out_path);
	return 0;
}

int run_relations(const CommonOpts &c, const std::string &group,
                  std::int64_t max_len)
{
	check_scan_length(max_len, "relations");
	std::vector<Word> rel = relations_up_to(make_oracle(group), max_len);
	if (want_json(c, "json"))
	{
		json arr = json::array();
		for (const Word &w : rel)
			arr.push_back(w.str());
		emit(dump(json{{"group", group},
		               {"max_len", max_len},
		               {"relations", arr}}),
		     c.out_path);
	}
	else
	{
		std::vector<std::vector<std::string>> rows;
		for (const Word &w : rel)
			rows.push_back({fmt::format("{}", w.length()), w.str()});
		emit(csv_table({"length", "word"}, rows), c.out_path);
	}
	return 0;
}

// ---- wreath-limit / free-limit --------------------------------------------

int run_wreath_limit(const CommonOpts &c, const std::string &n_range,
                     std::int64_t max_len)
{
	auto ns = range_values(n_range, "--n", "wreath-limit", 1);
	std::vector<std::vector<std::string>> rows;
	json arr = json::array();
	for (std::int64_t n : ns)
	{
		std::int64_t an = n < 0 ? -n : n;
		std::int64_t cap =
		    max_len > 0 ? max_len : std::min<std::int64_t>(an + 4, 10);
		check_scan_length(cap, "wreath-limit");
		DisagreementResult r =
		    first_disagreement(bs_oracle(1, n), wreath_oracle(), cap);
		auto cells = disagreement_cells(r);
		rows.push_back({fmt::format("{}", n), cells[0], cells[1], cells[2]});
		arr.push_back(with_front_keys({{"n", n}}, disagreement_json(r)));
	}
	emit(want_json(c, "csv")
	         ? dump(arr)
	         : csv_table({"n", "kind", "value", "witness"}, rows),
	     c.out_path);
	return 0;
}

int run_free_limit(const CommonOpts &c, const std::string &j_range,
                   std::int64_t max_len)
{
	auto js = range_values(j_range, "--j", "free-limit", 1);
	std::vector<std::vector<std::string>> rows;
	json arr = json::array();
	bool contradiction = false;
	for (std::int64_t j : js)
	{
		if (j < 1)
		{
			std::cerr << fmt::format(
			    "free-limit: skipping --j={} (family needs j >= 1)\n", j);
			continue;
		}
		std::int64_t formula = girth_formula(j, j + 1);
		std::int64_t cap = max_len > 0 ? max_len : formula;
		check_scan_length(cap, "free-limit");
		DisagreementResult r =
		    first_disagreement(bs_oracle(j, j + 1), free_oracle(), cap);

		// A found disagreement must sit exactly at the girth; agreement is
		// conclusive only when the scan reached that far.
		std::string match;
		if (r.found())
			match = bstr(r.lambda == formula);
		else
			match = cap >= formula ? "false" : "unknown";
		contradiction = contradiction || match == "false";

		rows.push_back({fmt::format("{}", j), fmt::format("{}", j),
		                fmt::format("{}", j + 1), fmt::format("{}", formula),
		                r.found() ? fmt::format("{}", r.lambda) : "", match});
		arr.push_back(
		    json{{"j", j},
		         {"m", j},
		         {"n", j + 1},
		         {"formula", formula},
		         {"lambda", r.found() ? json(r.lambda) : json(nullptr)},
		         {"match", match == "unknown" ? json(nullptr)
		                                      : json(match == "true")}});
	}
	if (rows.empty())
		throw CliError(1, "free-limit: no usable values left in --j");
	emit(want_json(c, "csv")
	         ? dump(arr)
	         : csv_table({"j", "m", "n", "formula", "lambda", "match"}, rows),
	     c.out_path);
	return contradiction ? 2 : 0;
}

// ---- congruence -----------------------------------------------------------

int run_congruence(const CommonOpts &c, const std::string &m_range,
                   const std::string &n_range, const std::string &h_range)
{
	auto ms = range_values(m_range, "--m", "congruence", 1);
	auto ns = range_values(n_range, "--n", "congruence", 2);
	Range hr = parse_range(h_range, "--h");
	if (hr.lo < 1)
		throw CliError(1, "congruence: --h values must be >= 1");

	std::vector<std::vector<std::string>> rows;
	json arr = json::array();
	bool all_match = true;
	std::int64_t cells_budget = kMaxGridCells;
	for (std::int64_t m : ms)
	{
		if (c.verbose && m < 0)
			std::cerr << fmt::format(
			    "congruence: m={} handled through the sign flip "
			    "bs:{},n = bs:{},-n\n",
			    m, m, -m);
		for (std::int64_t n : ns)
		{
			BSGroup G(m, n);
			CongruenceModulus cm = congruence_modulus(m, n);
			for (std::int64_t h = hr.lo; h <= hr.hi; ++h)
			{
				mpz_class mod = cm.modulus(static_cast<int>(h));
				std::int64_t kmax =
				    checked_int64(mod, "congruence modulus m1^h*d");
				if ((cells_budget -= kmax) < 0)
					throw CliError(
					    3, fmt::format("congruence: grid exceeds {} cells",
					                   kMaxGridCells));
				for (std::int64_t k = 0; k < kmax; ++k)
				{
					bool oracle = is_identity(
					    G,
					    congruence_witness_word(m, k, static_cast<int>(h)));
					bool pred =
					    congruence_predicate(m, n, static_cast<int>(h), k);
					bool match = oracle == pred;
					all_match = all_match && match;
					rows.push_back(
					    {fmt::format("{}", m), fmt::format("{}", n),
					     fmt::format("{}", h), fmt::format("{}", k),
					     bstr(oracle), bstr(pred), bstr(match)});
					arr.push_back(json{{"m", m},
					                   {"n", n},
					                   {"h", h},
					                   {"k", k},
					                   {"oracle", oracle},
					                   {"predicate", pred},
					                   {"match", match}});
				}
			}
		}
	}
	emit(want_json(c, "csv")
	         ? dump(arr)
	         : csv_table({"m", "n", "h", "k", "oracle", "predicate", "match"},
	                     rows),
	     c.out_path);
	return all_match ? 0 : 2;
}

// ---- limit / cauchy / noninjective ----------------------------------------

int run_limit(const CommonOpts &c, std::int64_t m, const std::string &seq,
              std::int64_t precision, std::int64_t budget)
{
	if (precision < 1 || precision > 62)
		throw CliError(1, "limit: --precision must be in [1, 62]");
	IntegerSequence s = parse_sequence_spec(seq, m);
	MadicInt l =
	    limit_of_sequence(m, static_cast<int>(precision), s.at, budget);
	if (want_json(c, "json"))
		emit(dump(madic_json(l)), c.out_path);
	else
		emit(csv_table({"m", "H", "residue"},
		               {{fmt::format("{}", l.base()),
		                 fmt::format("{}", l.precision()),
		                 l.residue().get_str()}}),
		     c.out_path);
	return 0;
}

int run_cauchy(const CommonOpts &c, std::int64_t m, const std::string &seq,
               std::int64_t count, std::int64_t max_len,
               std::int64_t precision, std::int64_t budget)
{
	if (count < 2)
		throw CliError(1, "cauchy: --count must be >= 2");
	check_scan_length(max_len, "cauchy");
	if (precision < 1 || precision > 62)
		throw CliError(1, "cauchy: --precision must be in [1, 62]");

	IntegerSequence s = parse_sequence_spec(seq, m);
	std::vector<std::int64_t> n;
	for (std::int64_t j = 0; j < count; ++j)
	{
		std::int64_t v = checked_int64(s.at(j), fmt::format("seq({})", j));
		if (v == 0)
			throw CliError(
			    1, fmt::format("cauchy: seq({}) = 0 names no group", j));
		n.push_back(v);
	}

	std::vector<std::vector<std::string>> rows;
	json pairs = json::array();
	for (std::int64_t i = 0; i < count; ++i)
	{
		for (std::int64_t j = i + 1; j < count; ++j)
		{
			DisagreementResult r = first_disagreement(
			    bs_oracle(m, n[i]), bs_oracle(m, n[j]), max_len);
			auto cells = disagreement_cells(r);
			rows.push_back({"pair", fmt::format("{}", i),
			                fmt::format("{}", j), cells[0], cells[1],
			                cells[2]});
			pairs.push_back(with_front_keys({{"i", i}, {"j", j}},
			                                disagreement_json(r)));
		}
	}

	MadicInt l =
	    limit_of_sequence(m, static_cast<int>(precision), s.at, budget);
	rows.push_back({"limit", fmt::format("{}", l.base()),
	                fmt::format("{}", l.precision()), "madic",
	                l.residue().get_str(), ""});

	if (want_json(c, "csv"))
		emit(dump(json{{"pairs", pairs}, {"limit", madic_json(l)}}),
		     c.out_path);
	else
		emit(csv_table({"record", "i", "j", "kind", "value", "witness"},
		               rows),
		     c.out_path);
	return 0;
}

int run_noninjective(const CommonOpts &c, std::int64_t m,
                     const std::string &j_range)
{
	if (m < 1)
		throw CliError(1, "noninjective: --m must be >= 1");
	auto js = range_values(j_range, "--j", "noninjective", 1);
	Word witness = a_pow(1) * b_pow(m) * a_pow(-1) * b_pow(-(m + 1));

	std::vector<std::vector<std::string>> rows;
	json arr = json::array();
	bool all_match = true;

	bool base_trivial = is_identity(BSGroup(m, m + 1), witness);
	all_match = all_match && base_trivial;
	rows.push_back({"base", fmt::format("{}", m), "",
	                fmt::format("{}", m + 1), bstr(base_trivial), "true",
	                bstr(base_trivial)});
	arr.push_back(json{{"case", "base"},
	                   {"m", m},
	                   {"j", nullptr},
	                   {"n", m + 1},
	                   {"trivial", base_trivial},
	                   {"expected", true},
	                   {"match", base_trivial}});

	for (std::int64_t j : js)
	{
		if (j < 1)
		{
			std::cerr << fmt::format(
			    "noninjective: skipping --j={} (exponent must be >= 1)\n", j);
			continue;
		}
		mpz_class power;
		mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m),
		              static_cast<unsigned long>(j));
		std::int64_t nj =
		    checked_int64(mpz_class(1 + m + power), "family member 1+m+m^j");
		bool trivial = is_identity(BSGroup(m, nj), witness);
		bool match = !trivial;
		all_match = all_match && match;
		rows.push_back({"member", fmt::format("{}", m), fmt::format("{}", j),
		                fmt::format("{}", nj), bstr(trivial), "false",
		                bstr(match)});
		arr.push_back(json{{"case", "member"},
		                   {"m", m},
		                   {"j", j},
		                   {"n", nj},
		                   {"trivial", trivial},
		                   {"expected", false},
		                   {"match", match}});
	}

	emit(want_json(c, "csv")
	         ? dump(arr)
	         : csv_table(
	               {"case", "m", "j", "n", "trivial", "expected", "match"},
	               rows),
	     c.out_path);
	return all_match ? 0 : 2;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"experiments on Baumslag-Solitar groups in the space of "
	             "marked groups"};
	app.require_subcommand(1);

	CommonOpts common;
	auto add_common = [&common](CLI::App *sub) {
		sub->add_option("--format", common.format,
		                "output format (overrides the subcommand default)")
		    ->check(CLI::IsMember({"json", "csv"}));
		sub->add_option("--output", common.out_path,
		                "write the report to this file instead of stdout");
		sub->add_flag("--verbose", common.verbose,
		              "explanatory notes on stderr");
	};

	std::string red_group, red_word;
	CLI::App *reduce =
	    app.add_subcommand("reduce", "reduce a word in a marked group");
	reduce->add_option("--group", red_group, "free | wreath | bs:M,N")
	    ->required();
	reduce->add_option("--word", red_word, "compact or exponent syntax")
	    ->required();
	add_common(reduce);

	std::string girth_m, girth_n;
	CLI::App *girth = app.add_subcommand(
	    "girth", "shortest-relation formula vs. exhaustive search; exits 2 "
	             "on any mismatch");
	girth->add_option("--m", girth_m, "m range LO..HI (0 skipped)")
	    ->required();
	girth->add_option("--n", girth_n, "n range LO..HI (0 skipped)")
	    ->required();
	add_common(girth);

	std::string cmp_g1, cmp_g2;
	std::int64_t cmp_max = 12;
	CLI::App *compare = app.add_subcommand(
	    "compare", "first word telling two marked groups apart");
	compare->add_option("--g1", cmp_g1, "first group spec")->required();
	compare->add_option("--g2", cmp_g2, "second group spec")->required();
	compare->add_option("--max-len", cmp_max, "scan cap (default 12)");
	add_common(compare);

	std::string rel_group;
	std::int64_t rel_max = 12;
	CLI::App *relations = app.add_subcommand(
	    "relations", "cyclically reduced trivial words up to a length");
	relations->add_option("--group", rel_group, "group spec")->required();
	relations->add_option("--max-len", rel_max, "scan cap (default 12)");
	add_common(relations);

	std::string wl_n = "2..5";
	std::int64_t wl_max = 0;
	CLI::App *wreath_limit = app.add_subcommand(
	    "wreath-limit", "agreement radius of BS(1,n) with Z wr Z");
	wreath_limit->add_option("--n", wl_n, "n range (default 2..5)");
	wreath_limit->add_option(
	    "--max-len", wl_max,
	    "scan cap for every row (default: min(|n|+4, 10) per row)");
	add_common(wreath_limit);

	std::string fl_j = "2..5";
	std::int64_t fl_max = 0;
	CLI::App *free_limit = app.add_subcommand(
	    "free-limit", "girth growth of BS(j,j+1) against the free group; "
	                  "exits 2 on any contradicted row");
	free_limit->add_option("--j", fl_j, "j range (default 2..5)");
	free_limit->add_option(
	    "--max-len", fl_max,
	    "scan cap for every row (default: the formula value per row)");
	add_common(free_limit);

	std::string cong_m = "2..3", cong_n = "2..5", cong_h = "1..2";
	CLI::App *congruence = app.add_subcommand(
	    "congruence", "witness-word triviality vs. the congruence "
	                  "predicate; exits 2 on any mismatch");
	congruence->set_help_flag("--help", "print help"); // frees -h for --h
	congruence->add_option("--m", cong_m, "m range (default 2..3)");
	congruence->add_option("--n", cong_n, "n range, |n| >= 2 (default 2..5)");
	congruence->add_option("--h", cong_h, "depth range (default 1..2)");
	add_common(congruence);

	std::int64_t cau_m = 0, cau_count = 4, cau_max = 8, cau_prec = 4,
	             cau_budget = 64;
	std::string cau_seq;
	CLI::App *cauchy = app.add_subcommand(
	    "cauchy",
	    "pairwise agreement radii for BS(m, seq(j)) plus the m-adic limit "
	    "of the sequence; CSV rows are record=pair (i,j,kind,value,witness) "
	    "then record=limit (i=m, j=H, value=residue)");
	cauchy->add_option("--m", cau_m, "fixed m of the family")->required();
	cauchy->add_option("--seq", cau_seq, "C+S*M^j with M = m, or list:[..]")
	    ->required();
	cauchy->add_option("--count", cau_count, "members to compare (default 4)");
	cauchy->add_option("--max-len", cau_max, "scan cap (default 8)");
	cauchy->add_option("--precision", cau_prec,
	                   "madic precision H (default 4)");
	cauchy->add_option("--budget", cau_budget,
	                   "limit probe budget (default 64)");
	add_common(cauchy);

	std::int64_t ni_m = 0;
	std::string ni_j = "2..5";
	CLI::App *noninjective = app.add_subcommand(
	    "noninjective", "one witness word, trivial at the base parameter "
	                    "only; exits 2 on any mismatch");
	noninjective->add_option("--m", ni_m, "m >= 1")->required();
	noninjective->add_option("--j", ni_j, "family exponents (default 2..5)");
	add_common(noninjective);

	std::int64_t lim_m = 0, lim_prec = 8, lim_budget = 64;
	std::string lim_seq;
	CLI::App *limit = app.add_subcommand(
	    "limit", "m-adic limit of an integer sequence spec");
	limit->add_option("--m", lim_m, "base, |m| >= 2")->required();
	limit->add_option("--seq", lim_seq, "C+S*M^j with M = m, or list:[..]")
	    ->required();
	limit->add_option("--precision", lim_prec, "tower height H (default 8)");
	limit->add_option("--budget", lim_budget, "probe budget (default 64)");
	add_common(limit);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int rc = app.exit(e);
		return rc == 0 ? 0 : 1;
	}

	try
	{
		if (app.got_subcommand(reduce))
			return run_reduce(common, red_group, red_word);
		if (app.got_subcommand(girth))
			return run_girth(common, girth_m, girth_n);
		if (app.got_subcommand(compare))
			return run_compare(common, cmp_g1, cmp_g2, cmp_max);
		if (app.got_subcommand(relations))
			return run_relations(common, rel_group, rel_max);
		if (app.got_subcommand(wreath_limit))
			return run_wreath_limit(common, wl_n, wl_max);
		if (app.got_subcommand(free_limit))
			return run_free_limit(common, fl_j, fl_max);
		if (app.got_subcommand(congruence))
			return run_congruence(common, cong_m, cong_n, cong_h);
		if (app.got_subcommand(cauchy))
			return run_cauchy(common, cau_m, cau_seq, cau_count, cau_max,
			                  cau_prec, cau_budget);
		if (app.got_subcommand(noninjective))
			return run_noninjective(common, ni_m, ni_j);
		if (app.got_subcommand(limit))
			return run_limit(common, lim_m, lim_seq, lim_prec, lim_budget);
		return 1;
	}
	catch (const CliError &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return e.code;
	}
	catch (const DivergenceError &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	catch (const std::length_error &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	catch (const std::invalid_argument &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	catch (const std::exception &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return 2;
	}
}
