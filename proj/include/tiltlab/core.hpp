#ifndef TILTLAB_CORE_HPP
#define TILTLAB_CORE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiltlab {

// Error codes shared with the C API and the CLI exit codes.
enum class Errc : int {
    invalid = 1,
    parse = 2,
    verification = 3,
    resource = 4,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& msg)
        : Error(Errc::parse, "parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// A robot slid past the world extent of an open-bordered world.
struct EscapedError : Error {
    EscapedError(int robot, int move_index)
        : Error(Errc::verification,
                "robot " + std::to_string(robot) + " escaped" +
                    (move_index >= 0 ? " at move " + std::to_string(move_index) : "")),
          robot(robot), move_index(move_index) {}
    int robot;
    int move_index;
};

enum class Move : std::uint8_t { Up, Right, Down, Left };

char move_char(Move m);
Move move_from_char(char c);
std::vector<Move> parse_moves(std::string_view s);  // string over "urdl"
std::string moves_string(const std::vector<Move>& moves);
Move opposite(Move m);
bool horizontal(Move m);

struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        return std::hash<long long>()((static_cast<long long>(c.x) << 32) ^ static_cast<unsigned>(c.y));
    }
};

// Immutable obstacle grid. Bordered worlds block at the extent; open worlds
// let robots escape (which raises EscapedError during simulation).
class World {
public:
    World(int width, int height, bool bordered, std::vector<Cell> obstacles);

    int width() const { return width_; }
    int height() const { return height_; }
    bool bordered() const { return bordered_; }
    bool obstacle(Cell c) const;
    bool in_bounds(Cell c) const { return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_; }
    std::size_t obstacle_count() const { return count_; }
    std::vector<Cell> obstacles() const;

    // Nearest obstacle strictly beyond `from` in the given direction, same lane.
    // Returns true and sets `coord` to the obstacle's x (horizontal) or y (vertical).
    bool next_obstacle(Cell from, Move dir, int& coord) const;

private:
    int width_;
    int height_;
    bool bordered_;
    std::size_t count_;
    std::vector<std::vector<int>> in_row_;  // per y: sorted obstacle x's
    std::vector<std::vector<int>> in_col_;  // per x: sorted obstacle y's
};

struct Configuration {
    std::vector<Cell> robots;  // robot id = index
    std::vector<char> labels;  // same length; display glyphs

    std::size_t size() const { return robots.size(); }
    bool operator==(const Configuration&) const = default;
};

// Throws Error(invalid) when the configuration breaks world invariants.
void validate(const World& world, const Configuration& config);

// One maximal-extent move applied to every robot simultaneously.
Configuration step(const World& world, const Configuration& config, Move m);

// Left fold of step; EscapedError carries the index of the offending move.
Configuration run(const World& world, const Configuration& config, const std::vector<Move>& moves);

struct Scene {
    World world;
    Configuration config;
};

// Text format: line 1 "width height [bordered|open]"; then height rows top to
// bottom, '#' obstacle, '.' free, any other glyph a robot labeled with it.
Scene parse_scene(std::string_view text);
std::string serialize_scene(const World& world, const Configuration& config);

}  // namespace tiltlab

#endif
