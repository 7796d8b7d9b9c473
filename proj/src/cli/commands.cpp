#include "dcm/cli/commands.hpp"

#include <bit>
#include <chrono>
#include <functional>
#include <sstream>

#include "dcm/cli/cache.hpp"
#include "dcm/cli/suites.hpp"
#include "dcm/dcsum.hpp"
#include "dcm/error.hpp"
#include "dcm/ksum.hpp"
#include "dcm/pmi.hpp"
#include "dcm/wcode.hpp"

namespace dcm::cli {
namespace {

std::string hex(std::uint32_t x) {
    std::ostringstream os;
    os << "0x" << std::hex << x;
    return os.str();
}

void common_parameters(Report& rep, const FieldRef& field, const RunOptions& opts) {
    auto& p = rep.parameters();
    p["q"] = std::to_string(field->size());
    p["modulus"] = hex(field->modulus());
    p["budget"] = std::to_string(opts.budget);
    p["workers"] = opts.workers;
}

// Runs body, timing it and mapping library errors onto exit statuses:
// range, usage and budget errors give 2, integrality and other failures 1.
Report run(const std::string& command, const RunOptions& opts, const std::function<void(Report&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Report rep(command, opts.argv);
    try {
        body(rep);
    } catch (const DomainError& e) {
        rep.set_error(e.what(), kUsage);
    } catch (const BudgetExceeded& e) {
        rep.set_error(e.what(), kUsage);
    } catch (const std::exception& e) {
        rep.set_error(e.what(), kFailure);
    }
    rep.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return rep;
}

nlohmann::json histogram_json(const TraceHistogram& h) {
    nlohmann::json j = nlohmann::json::object();
    for (std::uint32_t b = 0; b < h.field().size(); ++b) j[std::to_string(b)] = h[b].get_str();
    return j;
}

}  // namespace

FieldRef field_for_q(std::uint64_t q, std::optional<std::uint32_t> modulus) {
    if (q < 2 || !std::has_single_bit(q) || q > (1ull << Field::kMaxDegree))
        throw DomainError("q must be a power of two between 2 and 2^24, got " + std::to_string(q));
    return field_new(std::countr_zero(q), modulus);
}

Report cmd_verify(const std::string& suite, const RunOptions& opts) {
    return run("verify", opts, [&](Report& rep) {
        rep.parameters()["suite"] = suite;
        rep.parameters()["budget"] = std::to_string(opts.budget);
        rep.parameters()["workers"] = opts.workers;
        if (!is_suite(suite)) {
            std::string names;
            for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
            throw DomainError("unknown suite '" + suite + "'; expected one of: " + names);
        }
        SuiteOptions so;
        so.budget = opts.budget;
        so.workers = opts.workers;
        std::vector<std::string> parts;
        if (suite == "all") {
            for (const auto& s : suite_names())
                if (s != "all") parts.push_back(s);
        } else {
            parts.push_back(suite);
        }
        // A budget overrun ends that suite only; the others still run.
        std::string errors;
        for (const auto& s : parts) {
            try {
                run_suite(s, rep, so);
            } catch (const BudgetExceeded& e) {
                errors += (errors.empty() ? "" : "; ") + s + ": " + e.what();
            }
        }
        rep.results()["checks_run"] = std::to_string(rep.check_count());
        rep.results()["checks_failed"] = std::to_string(rep.failure_count());
        if (!errors.empty()) throw BudgetExceeded(errors);
    });
}

Report cmd_recursion(int n, std::uint64_t q, unsigned h, bool compare, const RunOptions& opts) {
    return run("recursion", opts, [&](Report& rep) {
        auto& p = rep.parameters();
        p["n"] = n;
        p["h"] = h;
        p["compare"] = compare;
        p["q"] = std::to_string(q);
        const auto field = field_for_q(q, opts.modulus);
        common_parameters(rep, field, opts);
        require_recursion_range(n, *field);
        const auto r = t1k_recursive(n, field, h, compare);
        auto& res = rep.results();
        res["t1k_recursive"] = r.recursive.get_str();
        nlohmann::json d = nlohmann::json::array();
        for (const auto& x : r.d) d.push_back(x.get_str());
        res["d"] = d;
        nlohmann::json lower = nlohmann::json::object();
        for (const auto& [l, v] : r.lower) lower[std::to_string(l)] = v.get_str();
        res["lower"] = lower;
        if (compare) {
            res["t1k_direct"] = r.oracle->get_str();
            res["match"] = *r.match;
            rep.check("t1k_recursive_equals_direct", r.oracle->get_str(), r.recursive.get_str());
        }
    });
}

Report cmd_histogram(const HistogramRequest& req, const RunOptions& opts) {
    return run("histogram", opts, [&](Report& rep) {
        auto& p = rep.parameters();
        p["n"] = req.n;
        p["r_coset"] = req.r_coset;
        p["family"] = std::string(family_name(req.family));
        p["closed_form"] = req.closed_form;
        p["q"] = std::to_string(req.q);
        if (req.jmax) p["jmax"] = *req.jmax;
        const auto field = field_for_q(req.q, opts.modulus);
        common_parameters(rep, field, opts);
        if (req.n < 1 || req.r_coset < 0 || req.r_coset > req.n)
            throw DomainError("need n >= 1 and 0 <= r-coset <= n, got n=" + std::to_string(req.n) +
                              " r-coset=" + std::to_string(req.r_coset));
        const bool closed_available = req.n % 2 == 1 && req.r_coset == req.n - 1;
        auto closed = [&] {
            return req.family == Family::Orthogonal ? dc_histogram_closed(req.n, field)
                                                    : nhat_histogram_closed(req.n, field);
        };

        std::optional<TraceHistogram> hist;
        if (req.closed_form) {
            if (!closed_available)
                throw DomainError("a closed form exists only for r-coset = n-1 with n odd");
            hist = closed();
        } else {
            const CacheKey key{req.n, req.r_coset, req.family};
            std::optional<HistogramCache> cache;
            if (opts.cache_dir) cache.emplace(*opts.cache_dir);
            if (cache) hist = cache->load(key, field);
            if (!hist) {
                try {
                    hist = dc_trace_histogram({req.n, field, req.family}, req.r_coset, {opts.budget, opts.workers});
                } catch (const BudgetExceeded& e) {
                    throw BudgetExceeded(std::string(e.what()) + "; raise --budget" +
                                         (closed_available ? " or pass --closed-form" : ""));
                }
                if (cache) cache->store(key, *hist);
            }
            const auto orders = group_order_data(req.n, *field);
            rep.check("total_equals_cell_size", orders.cell_size[req.r_coset].get_str(), hist->total().get_str());
            if (closed_available) {
                const auto expected = closed();
                bool all = true;
                for (std::uint32_t b = 0; b < field->size(); ++b)
                    all = rep.check("beta=" + std::to_string(b), expected[b].get_str(), (*hist)[b].get_str()) && all;
                rep.results()["verdict"] = all ? "match" : "mismatch";
            }
        }
        auto& res = rep.results();
        res["histogram"] = histogram_json(*hist);
        res["total"] = hist->total().get_str();
        if (req.jmax) {
            nlohmann::json c = nlohmann::json::array();
            for (const auto& v : weight_prefix(*hist, *req.jmax).values) c.push_back(v.get_str());
            res["weight_prefix"] = c;
        }
    });
}

Report cmd_tables(std::uint64_t q, unsigned hmax, const RunOptions& opts) {
    return run("tables", opts, [&](Report& rep) {
        rep.parameters()["q"] = std::to_string(q);
        rep.parameters()["hmax"] = hmax;
        if (q > 1024) throw DomainError("tables need q <= 2^10, got " + std::to_string(q));
        const auto field = field_for_q(q, opts.modulus);
        rep.parameters()["modulus"] = hex(field->modulus());
        const auto& tab = kloosterman_table(field);
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint32_t a = 1; a < field->size(); ++a)
            rows.push_back({{"a", std::to_string(a)},
                            {"trace", std::to_string(field->trace(a))},
                            {"K", std::to_string(tab[a])}});
        nlohmann::json mom = nlohmann::json::array();
        for (unsigned h = 0; h <= hmax; ++h) {
            const auto m = moments(field, h);
            mom.push_back({{"h", std::to_string(h)}, {"MK", m.mk.get_str()}, {"T0K", m.t0k.get_str()},
                           {"T1K", m.t1k.get_str()}});
        }
        rep.results()["kloosterman"] = rows;
        rep.results()["moments"] = mom;
    });
}

std::string tables_csv(std::uint64_t q, const RunOptions& opts) {
    if (q > 1024) throw DomainError("tables need q <= 2^10, got " + std::to_string(q));
    const auto field = field_for_q(q, opts.modulus);
    const auto& tab = kloosterman_table(field);
    std::ostringstream os;
    os << "a,trace,K\n";
    for (std::uint32_t a = 1; a < field->size(); ++a) os << a << ',' << field->trace(a) << ',' << tab[a] << '\n';
    return os.str();
}

}  // namespace dcm::cli
