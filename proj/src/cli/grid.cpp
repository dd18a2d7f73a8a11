#include "ajcable/cli.hpp"

#include "ajcable/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace ajcable {

std::vector<CablingParams> default_grid() {
    std::vector<CablingParams> out;
    for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {5, 2}, {5, 3}, {7, 3}, {-3, 2}, {-5, 3}})
        for (std::int64_t s = 2; s <= 5; ++s) {
            const std::int64_t pqs = p * q * s;
            for (std::int64_t r : {std::int64_t{-1}, std::int64_t{-7}, pqs + 1}) out.push_back({p, q, r, s});
            if (p < 0)
                for (std::int64_t r : {std::int64_t{1}, std::int64_t{7}, pqs - 1}) out.push_back({p, q, r, s});
        }
    return out;
}

std::vector<CablingParams> parse_grid(std::string_view text) {
    std::vector<CablingParams> out;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        CablingParams c;
        if (!(ls >> c.p)) continue;
        std::string extra;
        if (!(ls >> c.q >> c.r >> c.s) || (ls >> extra))
            throw BadParams("grid line " + std::to_string(lineno) + ": expected \"p q r s\"");
        try {
            c.validate();
        } catch (const BadParams& e) {
            throw BadParams("grid line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(c);
    }
    return out;
}

std::vector<CablingParams> load_grid(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw BadParams("cannot read grid file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_grid(ss.str());
}

std::string grid_text(const std::vector<CablingParams>& grid) {
    std::string out = "# p q r s\n";
    for (const auto& c : grid)
        out += std::to_string(c.p) + " " + std::to_string(c.q) + " " + std::to_string(c.r) + " " + std::to_string(c.s) + "\n";
    return out;
}

unsigned worker_count() {
    if (const char* env = std::getenv("AJCABLE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace ajcable
