#pragma once

// Checking published table rows against computed growth reports.

#include "bct/growth.hpp"
#include "bct/parse.hpp"
#include "bct/square_class.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bct {

struct TableRow {
    std::string field;
    std::string base_group;
    std::string d;
    std::string extended_group;
    std::string model;
};

inline std::vector<TableRow> parse_table(const nlohmann::json& j, const std::string& default_field = "") {
    if (!j.is_array()) throw std::invalid_argument("table: expected a JSON array of rows");
    std::vector<TableRow> rows;
    for (const auto& r : j) {
        TableRow t;
        t.field = r.value("field", default_field);
        if (t.field.empty()) throw std::invalid_argument("table: row without a field tag");
        t.base_group = r.at("base_group").get<std::string>();
        t.d = r.at("d").get<std::string>();
        t.extended_group = r.at("extended_group").get<std::string>();
        t.model = r.at("model").get<std::string>();
        rows.push_back(std::move(t));
    }
    return rows;
}

inline std::vector<TableRow> load_table(const std::string& path, const std::string& default_field = "") {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_table(nlohmann::json::parse(in), default_field);
}

struct RowResult {
    TableRow row;
    bool pass = false;
    bool base_ok = false, d_found = false, group_ok = false;
    std::string computed_base;
    std::string computed_group;  // group of the matching record, if any
    std::string error;
    double seconds = 0;
};

/// Shares one growth computation between rows with the same field and model.
class GrowthCache {
  public:
    std::shared_ptr<const GrowthReport> get(const std::string& field, const std::string& model,
                                            const std::function<GrowthReport()>& compute) {
        std::shared_future<std::shared_ptr<const GrowthReport>> fut;
        std::promise<std::shared_ptr<const GrowthReport>> prom;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto key = std::make_pair(field, model);
            auto it = map_.find(key);
            if (it == map_.end()) {
                fut = prom.get_future().share();
                map_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                prom.set_value(std::make_shared<const GrowthReport>(compute()));
            } catch (...) {
                prom.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

  private:
    std::mutex mu_;
    std::map<std::pair<std::string, std::string>, std::shared_future<std::shared_ptr<const GrowthReport>>> map_;
};

inline RowResult check_row(const TableRow& row, GrowthCache& cache, const GrowthOptions& opt = {}) {
    RowResult res;
    res.row = row;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const QuadField K = parse_field(row.field);
        const auto C = parse_curve(row.model, K);
        const QuadElem d = parse_element(row.d, K);
        const auto base = parse_group(row.base_group);
        const auto ext = parse_group(row.extended_group);
        if (!base || !ext) throw std::invalid_argument("bad group name in row");
        auto rep = cache.get(row.field, row.model, [&] { return growth_extensions(C, opt); });
        res.computed_base = rep->base.invariants.name();
        res.base_ok = rep->base.invariants == *base;
        for (const auto& r : rep->records) {
            if (!same_square_class(r.d, d)) continue;
            res.d_found = true;
            res.computed_group = r.group.invariants.name();
            res.group_ok = r.group.invariants == *ext;
        }
        res.pass = res.base_ok && res.d_found && res.group_ok;
    } catch (const std::exception& e) {
        res.error = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Results are in input order regardless of the number of jobs.
inline std::vector<RowResult> check_rows(const std::vector<TableRow>& rows, unsigned jobs, GrowthCache& cache,
                                         const GrowthOptions& opt = {}) {
    std::vector<RowResult> out(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) out[i] = check_row(rows[i], cache, opt);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

inline std::string describe(const RowResult& r) {
    std::string s = std::string(r.pass ? "PASS" : "FAIL") + "  " + r.row.field + "  " + r.row.base_group + " | " + r.row.d +
                    " | " + r.row.extended_group + " | " + r.row.model;
    if (r.pass) return s;
    if (!r.error.empty()) return s + "  error: " + r.error;
    if (!r.base_ok) s += "  base computed " + r.computed_base;
    if (!r.d_found) s += "  no growth record in this square class";
    else if (!r.group_ok) s += "  group computed " + r.computed_group;
    return s;
}

}  // namespace bct
