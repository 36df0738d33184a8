#include "edupol/population.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace edupol {

Population::Population(std::vector<TalentProfile> agents) : agents_(std::move(agents)) {
    if (agents_.empty()) throw std::invalid_argument("population must contain at least one agent");
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        const auto& a = agents_[i];
        if (!(a.t_a >= 0.0) || !(a.t_b >= 0.0))
            throw std::invalid_argument("agent " + std::to_string(i) + " has negative talent");
        if (!(a.weight > 0.0))
            throw std::invalid_argument("agent " + std::to_string(i) + " has nonpositive weight");
        total_mass_ += a.weight;
    }
}

bool is_pluralistic(const Population& pop) {
    bool better_in_a = false;
    bool better_in_b = false;
    for (const auto& agent : pop.agents()) {
        if (agent.t_a > agent.t_b) better_in_a = true;
        if (agent.t_b > agent.t_a) better_in_b = true;
        if (better_in_a && better_in_b) return true;
    }
    return false;
}

Population simplex_population(int n) {
    if (n < 2) throw std::invalid_argument("simplex_population requires n >= 2");
    std::vector<TalentProfile> agents;
    agents.reserve(n);
    const double interior = 1.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double t_a = static_cast<double>(i) / (n - 1);
        const double weight = (i == 0 || i == n - 1) ? 0.5 * interior : interior;
        agents.push_back({t_a, 1.0 - t_a, weight});
    }
    return Population(std::move(agents));
}

namespace {

bool parse_field(std::string_view field, double& out) {
    // Trim surrounding whitespace; std::from_chars wants a tight token.
    std::size_t begin = 0, end = field.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(field[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(field[end - 1]))) --end;
    if (begin == end) return false;
    const char* first = field.data() + begin;
    const char* last = field.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_row(const std::string& line, TalentProfile& agent) {
    std::size_t first_comma = line.find(',');
    if (first_comma == std::string::npos) return false;
    std::size_t second_comma = line.find(',', first_comma + 1);
    if (second_comma == std::string::npos) return false;
    if (line.find(',', second_comma + 1) != std::string::npos) return false;
    return parse_field(std::string_view(line).substr(0, first_comma), agent.t_a) &&
           parse_field(std::string_view(line).substr(first_comma + 1, second_comma - first_comma - 1),
                       agent.t_b) &&
           parse_field(std::string_view(line).substr(second_comma + 1), agent.weight);
}

}  // namespace

Population load_population(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open population file: " + path.string());

    std::vector<TalentProfile> agents;
    std::string line;
    int row = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        std::size_t start = view.find_first_not_of(" \t");
        if (start == std::string_view::npos) continue;
        if (view[start] == '#') continue;

        TalentProfile agent;
        if (!parse_row(line, agent)) {
            if (header_allowed) {
                header_allowed = false;  // one non-numeric header row is tolerated
                continue;
            }
            throw std::runtime_error("malformed population row " + std::to_string(row) + ": " + line);
        }
        header_allowed = false;
        if (agent.t_a < 0.0 || agent.t_b < 0.0)
            throw std::runtime_error("negative talent at row " + std::to_string(row));
        if (!(agent.weight > 0.0))
            throw std::runtime_error("nonpositive weight at row " + std::to_string(row));
        agents.push_back(agent);
    }
    if (agents.empty()) throw std::runtime_error("empty population: " + path.string());
    return Population(std::move(agents));
}

}  // namespace edupol
