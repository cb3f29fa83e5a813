#include "tiltlab/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace tiltlab {

char move_char(Move m) {
    switch (m) {
        case Move::Up: return 'u';
        case Move::Right: return 'r';
        case Move::Down: return 'd';
        case Move::Left: return 'l';
    }
    return '?';
}

Move move_from_char(char c) {
    switch (c) {
        case 'u': return Move::Up;
        case 'r': return Move::Right;
        case 'd': return Move::Down;
        case 'l': return Move::Left;
        default: throw Error(Errc::parse, std::string("invalid move character '") + c + "'");
    }
}

std::vector<Move> parse_moves(std::string_view s) {
    std::vector<Move> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == ' ' || c == '\n' || c == '\t' || c == ',') continue;
        out.push_back(move_from_char(c));
    }
    return out;
}

std::string moves_string(const std::vector<Move>& moves) {
    std::string s;
    s.reserve(moves.size());
    for (Move m : moves) s.push_back(move_char(m));
    return s;
}

Move opposite(Move m) {
    switch (m) {
        case Move::Up: return Move::Down;
        case Move::Down: return Move::Up;
        case Move::Left: return Move::Right;
        case Move::Right: return Move::Left;
    }
    return m;
}

bool horizontal(Move m) { return m == Move::Left || m == Move::Right; }

World::World(int width, int height, bool bordered, std::vector<Cell> obstacles)
    : width_(width), height_(height), bordered_(bordered), count_(0) {
    if (width <= 0 || height <= 0)
        throw Error(Errc::invalid, "world extent must be positive");
    in_row_.resize(static_cast<std::size_t>(height));
    in_col_.resize(static_cast<std::size_t>(width));
    std::sort(obstacles.begin(), obstacles.end());
    obstacles.erase(std::unique(obstacles.begin(), obstacles.end()), obstacles.end());
    for (const Cell& c : obstacles) {
        if (!in_bounds(c))
            throw Error(Errc::invalid, "obstacle (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                           ") outside world extent");
        in_row_[static_cast<std::size_t>(c.y)].push_back(c.x);
        in_col_[static_cast<std::size_t>(c.x)].push_back(c.y);
        ++count_;
    }
    for (auto& v : in_row_) std::sort(v.begin(), v.end());
    for (auto& v : in_col_) std::sort(v.begin(), v.end());
}

bool World::obstacle(Cell c) const {
    if (!in_bounds(c)) return false;
    const auto& row = in_row_[static_cast<std::size_t>(c.y)];
    return std::binary_search(row.begin(), row.end(), c.x);
}

std::vector<Cell> World::obstacles() const {
    std::vector<Cell> out;
    out.reserve(count_);
    for (int y = 0; y < height_; ++y)
        for (int x : in_row_[static_cast<std::size_t>(y)]) out.push_back({x, y});
    return out;
}

bool World::next_obstacle(Cell from, Move dir, int& coord) const {
    if (horizontal(dir)) {
        const auto& row = in_row_[static_cast<std::size_t>(from.y)];
        if (dir == Move::Right) {
            auto it = std::upper_bound(row.begin(), row.end(), from.x);
            if (it == row.end()) return false;
            coord = *it;
        } else {
            auto it = std::lower_bound(row.begin(), row.end(), from.x);
            if (it == row.begin()) return false;
            coord = *std::prev(it);
        }
    } else {
        const auto& col = in_col_[static_cast<std::size_t>(from.x)];
        if (dir == Move::Up) {
            auto it = std::upper_bound(col.begin(), col.end(), from.y);
            if (it == col.end()) return false;
            coord = *it;
        } else {
            auto it = std::lower_bound(col.begin(), col.end(), from.y);
            if (it == col.begin()) return false;
            coord = *std::prev(it);
        }
    }
    return true;
}

void validate(const World& world, const Configuration& config) {
    if (config.labels.size() != config.robots.size())
        throw Error(Errc::invalid, "configuration has mismatched label count");
    std::unordered_set<Cell, CellHash> seen;
    for (std::size_t i = 0; i < config.robots.size(); ++i) {
        const Cell& c = config.robots[i];
        if (!world.in_bounds(c))
            throw Error(Errc::invalid, "robot " + std::to_string(i) + " outside world extent");
        if (world.obstacle(c))
            throw Error(Errc::invalid, "robot " + std::to_string(i) + " on an obstacle");
        if (!seen.insert(c).second)
            throw Error(Errc::invalid, "two robots share cell (" + std::to_string(c.x) + "," +
                                           std::to_string(c.y) + ")");
    }
}

Configuration step(const World& world, const Configuration& config, Move m) {
    const std::size_t n = config.robots.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Robots furthest along the move direction settle first, so within a lane
    // the previously settled robot is the nearest possible blocker.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Cell& ca = config.robots[a];
        const Cell& cb = config.robots[b];
        switch (m) {
            case Move::Right: return ca.x != cb.x ? ca.x > cb.x : ca.y < cb.y;
            case Move::Left: return ca.x != cb.x ? ca.x < cb.x : ca.y < cb.y;
            case Move::Up: return ca.y != cb.y ? ca.y > cb.y : ca.x < cb.x;
            case Move::Down: return ca.y != cb.y ? ca.y < cb.y : ca.x < cb.x;
        }
        return a < b;
    });

    Configuration out = config;
    // Last settled robot coordinate per lane (lane = row for horizontal moves).
    std::vector<int> lane_limit;
    std::vector<char> lane_set;
    const bool horiz = horizontal(m);
    lane_limit.resize(static_cast<std::size_t>(horiz ? world.height() : world.width()), 0);
    lane_set.resize(lane_limit.size(), 0);

    for (std::size_t idx : order) {
        Cell c = config.robots[idx];
        const std::size_t lane = static_cast<std::size_t>(horiz ? c.y : c.x);
        int stop;       // final coordinate along the axis of motion
        bool blocked = false;
        int obst;
        if (world.next_obstacle(c, m, obst)) {
            blocked = true;
            stop = (m == Move::Right || m == Move::Up) ? obst - 1 : obst + 1;
        } else if (world.bordered()) {
            blocked = true;
            switch (m) {
                case Move::Right: stop = world.width() - 1; break;
                case Move::Left: stop = 0; break;
                case Move::Up: stop = world.height() - 1; break;
                case Move::Down: stop = 0; break;
            }
        }
        if (lane_set[lane]) {
            const int robot_stop = (m == Move::Right || m == Move::Up) ? lane_limit[lane] - 1
                                                                       : lane_limit[lane] + 1;
            if (!blocked) {
                blocked = true;
                stop = robot_stop;
            } else {
                const bool closer = (m == Move::Right || m == Move::Up) ? robot_stop < stop
                                                                        : robot_stop > stop;
                if (closer) stop = robot_stop;
            }
        }
        if (!blocked) throw EscapedError(static_cast<int>(idx), -1);
        if (horiz)
            out.robots[idx].x = stop;
        else
            out.robots[idx].y = stop;
        lane_limit[lane] = stop;
        lane_set[lane] = 1;
    }
    return out;
}

Configuration run(const World& world, const Configuration& config, const std::vector<Move>& moves) {
    Configuration cur = config;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        try {
            cur = step(world, cur, moves[i]);
        } catch (const EscapedError& e) {
            throw EscapedError(e.robot, static_cast<int>(i));
        }
    }
    return cur;
}

Scene parse_scene(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    if (lines.empty()) throw ParseError(1, 1, "empty world text");

    std::istringstream head(lines[0]);
    int width = 0, height = 0;
    if (!(head >> width >> height)) throw ParseError(1, 1, "expected 'width height [bordered|open]'");
    std::string border_word;
    bool bordered = true;
    if (head >> border_word) {
        if (border_word == "bordered")
            bordered = true;
        else if (border_word == "open")
            bordered = false;
        else
            throw ParseError(1, static_cast<int>(lines[0].find(border_word)) + 1,
                             "expected 'bordered' or 'open'");
    }
    if (width <= 0 || height <= 0) throw ParseError(1, 1, "world extent must be positive");
    if (static_cast<int>(lines.size()) < height + 1)
        throw ParseError(static_cast<int>(lines.size()), 1,
                         "expected " + std::to_string(height) + " grid rows");

    std::vector<Cell> obstacles;
    Configuration config;
    for (int row = 0; row < height; ++row) {
        const std::string& line = lines[static_cast<std::size_t>(row) + 1];
        if (static_cast<int>(line.size()) != width)
            throw ParseError(row + 2, static_cast<int>(line.size()) + 1,
                             "row has " + std::to_string(line.size()) + " cells, expected " +
                                 std::to_string(width));
        const int y = height - 1 - row;
        for (int x = 0; x < width; ++x) {
            const char c = line[static_cast<std::size_t>(x)];
            if (c == '#') {
                obstacles.push_back({x, y});
            } else if (c == '.') {
                // free
            } else if (c >= '!' && c <= '~') {
                config.robots.push_back({x, y});
                config.labels.push_back(c);
            } else {
                throw ParseError(row + 2, x + 1, "unprintable cell character");
            }
        }
    }
    World world(width, height, bordered, std::move(obstacles));
    validate(world, config);
    return Scene{std::move(world), std::move(config)};
}

std::string serialize_scene(const World& world, const Configuration& config) {
    std::vector<std::string> grid(static_cast<std::size_t>(world.height()),
                                  std::string(static_cast<std::size_t>(world.width()), '.'));
    for (const Cell& c : world.obstacles())
        grid[static_cast<std::size_t>(c.y)][static_cast<std::size_t>(c.x)] = '#';
    for (std::size_t i = 0; i < config.robots.size(); ++i) {
        const Cell& c = config.robots[i];
        char glyph = i < config.labels.size() ? config.labels[i] : 'o';
        if (glyph == '#' || glyph == '.' || glyph < '!' || glyph > '~') glyph = 'o';
        grid[static_cast<std::size_t>(c.y)][static_cast<std::size_t>(c.x)] = glyph;
    }
    std::string out = std::to_string(world.width()) + " " + std::to_string(world.height()) + " " +
                      (world.bordered() ? "bordered" : "open") + "\n";
    for (int y = world.height() - 1; y >= 0; --y) {
        out += grid[static_cast<std::size_t>(y)];
        out += '\n';
    }
    return out;
}

}  // namespace tiltlab
