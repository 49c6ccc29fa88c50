#include "fockbench/bundled.hpp"

namespace fockbench {

namespace {

// clang-format off
constexpr BundledRow kRows[] = {
    {"Home Furnishing/Furniture", "Mantelpiece", {-0.56, -0.31, -0.31, -0.46, -0.89}},
    {"Home Furnishing/Furniture", "Window Seat", {-0.44, -0.36, -0.33, -0.35, -0.74}},
    {"Home Furnishing/Furniture", "Painting", {-0.44, -0.48, -0.35, -0.33, -0.94}},
    {"Home Furnishing/Furniture", "Light Fixture", {-0.48, -0.45, -0.33, -0.28, -0.84}},
    {"Home Furnishing/Furniture", "Kitchen Counter", {-0.42, -0.44, -0.39, -0.24, -0.79}},
    {"Home Furnishing/Furniture", "Bath Tub", {-0.45, -0.44, -0.37, -0.41, -0.83}},
    {"Home Furnishing/Furniture", "Deck Chair", {-0.42, -0.38, -0.44, -0.39, -0.86}},
    {"Home Furnishing/Furniture", "Shelves", {-0.38, -0.43, -0.36, -0.34, -0.83}},
    {"Home Furnishing/Furniture", "Rug", {-0.48, -0.54, -0.45, -0.28, -1}},
    {"Home Furnishing/Furniture", "Bed", {-0.39, -0.48, -0.49, -0.39, -0.9}},
    {"Home Furnishing/Furniture", "Wall-Hangings", {-0.39, -0.44, -0.38, -0.27, -0.85}},
    {"Home Furnishing/Furniture", "Space Rack", {-0.53, -0.41, -0.37, -0.44, -0.9}},
    {"Home Furnishing/Furniture", "Ashtray", {-0.34, -0.45, -0.43, -0.35, -0.84}},
    {"Home Furnishing/Furniture", "Bar", {-0.51, -0.39, -0.43, -0.51, -1.03}},
    {"Home Furnishing/Furniture", "Lamp", {-0.51, -0.51, -0.45, -0.41, -1.05}},
    {"Home Furnishing/Furniture", "Wall Mirror", {-0.58, -0.51, -0.45, -0.35, -1.06}},
    {"Home Furnishing/Furniture", "Door Bell", {-0.39, -0.51, -0.53, -0.36, -0.99}},
    {"Home Furnishing/Furniture", "Hammock", {-0.48, -0.5, -0.47, -0.41, -0.98}},
    {"Home Furnishing/Furniture", "Desk", {-0.32, -0.58, -0.59, -0.39, -1}},
    {"Home Furnishing/Furniture", "Refrigerator", {-0.47, -0.4, -0.46, -0.39, -0.93}},
    {"Home Furnishing/Furniture", "Park Bench", {-0.31, -0.45, -0.36, -0.22, -0.79}},
    {"Home Furnishing/Furniture", "Waste Paper Basket", {-0.31, -0.51, -0.59, -0.27, -0.95}},
    {"Home Furnishing/Furniture", "Sculpture", {-0.48, -0.58, -0.49, -0.43, -1.13}},
    {"Home Furnishing/Furniture", "Sink Unit", {-0.46, -0.41, -0.41, -0.36, -0.91}},
    {"Spices/Herbs", "Molasses", {-0.41, -0.36, -0.31, -0.43, -0.75}},
    {"Spices/Herbs", "Salt", {-0.26, -0.28, -0.33, -0.37, -0.61}},
    {"Spices/Herbs", "Peppermint", {-0.41, -0.33, -0.33, -0.43, -0.78}},
    {"Spices/Herbs", "Curry", {-0.45, -0.42, -0.34, -0.31, -0.79}},
    {"Spices/Herbs", "Oregano", {-0.38, -0.43, -0.36, -0.35, -0.76}},
    {"Spices/Herbs", "MSG", {-0.36, -0.34, -0.37, -0.45, -0.76}},
    {"Spices/Herbs", "Chili Pepper", {-0.73, -0.54, -0.35, -0.46, -1.1}},
    {"Spices/Herbs", "Mustard", {-0.49, -0.44, -0.3, -0.41, -0.83}},
    {"Spices/Herbs", "Mint", {-0.46, -0.47, -0.32, -0.34, -0.85}},
    {"Spices/Herbs", "Cinnamon", {-0.48, -0.41, -0.34, -0.43, -0.84}},
    {"Spices/Herbs", "Parsley", {-0.4, -0.5, -0.36, -0.35, -0.84}},
    {"Spices/Herbs", "Saccarin", {-0.43, -0.34, -0.36, -0.46, -0.81}},
    {"Spices/Herbs", "Poppy Seeds", {-0.43, -0.43, -0.29, -0.4, -0.84}},
    {"Spices/Herbs", "Pepper", {-0.61, -0.41, -0.21, -0.46, -0.91}},
    {"Spices/Herbs", "Turmeric", {-0.54, -0.49, -0.38, -0.47, -0.91}},
    {"Spices/Herbs", "Sugar", {-0.46, -0.26, -0.31, -0.44, -0.81}},
    {"Spices/Herbs", "Vinegar", {-0.26, -0.31, -0.33, -0.36, -0.65}},
    {"Spices/Herbs", "Sesame Seeds", {-0.49, -0.44, -0.33, -0.4, -0.91}},
    {"Spices/Herbs", "Lemon Juice", {-0.3, -0.34, -0.46, -0.43, -0.78}},
    {"Spices/Herbs", "Chocolate", {-0.39, -0.36, -0.37, -0.44, -0.81}},
    {"Spices/Herbs", "Horseradish", {-0.4, -0.47, -0.37, -0.44, -0.86}},
    {"Spices/Herbs", "Vanilla", {-0.48, -0.44, -0.38, -0.48, -0.91}},
    {"Spices/Herbs", "Chives", {-0.38, -0.51, -0.53, -0.33, -0.99}},
    {"Spices/Herbs", "Root Ginger", {-0.43, -0.54, -0.41, -0.37, -0.91}},
    {"Pets/Farmyard Animals", "Goldfish", {-0.41, -0.43, -0.48, -0.53, -0.94}},
    {"Pets/Farmyard Animals", "Robin", {-0.39, -0.41, -0.22, -0.18, -0.59}},
    {"Pets/Farmyard Animals", "Blue-tit", {-0.31, -0.3, -0.24, -0.24, -0.56}},
    {"Pets/Farmyard Animals", "Collie Dog", {-0.48, -0.34, -0.34, -0.33, -0.79}},
    {"Pets/Farmyard Animals", "Camel", {-0.36, -0.46, -0.3, -0.24, -0.7}},
    {"Pets/Farmyard Animals", "Squirrel", {-0.24, -0.34, -0.31, -0.2, -0.59}},
    {"Pets/Farmyard Animals", "Guide Dog for Blind", {-0.35, -0.39, -0.36, -0.36, -0.76}},
    {"Pets/Farmyard Animals", "Spider", {-0.31, -0.36, -0.23, -0.19, -0.58}},
    {"Pets/Farmyard Animals", "Homing Pigeon", {-0.41, -0.44, -0.31, -0.25, -0.74}},
    {"Pets/Farmyard Animals", "Monkey", {-0.29, -0.31, -0.25, -0.31, -0.59}},
    {"Pets/Farmyard Animals", "Circus Horse", {-0.39, -0.38, -0.26, -0.23, -0.69}},
    {"Pets/Farmyard Animals", "Prize Bull", {-0.57, -0.49, -0.28, -0.35, -0.86}},
    {"Pets/Farmyard Animals", "Rat", {-0.29, -0.39, -0.31, -0.23, -0.65}},
    {"Pets/Farmyard Animals", "Badger", {-0.24, -0.3, -0.23, -0.19, -0.5}},
    {"Pets/Farmyard Animals", "Siamese Cat", {-0.5, -0.41, -0.36, -0.46, -0.9}},
    {"Pets/Farmyard Animals", "Race Horse", {-0.54, -0.46, -0.26, -0.24, -0.79}},
    {"Pets/Farmyard Animals", "Fox", {-0.33, -0.34, -0.19, -0.19, -0.51}},
    {"Pets/Farmyard Animals", "Donkey", {-0.45, -0.48, -0.26, -0.25, -0.78}},
    {"Pets/Farmyard Animals", "Field Mouse", {-0.3, -0.24, -0.18, -0.23, -0.46}},
    {"Pets/Farmyard Animals", "Ginger Tom-cat", {-0.34, -0.34, -0.34, -0.32, -0.71}},
    {"Pets/Farmyard Animals", "Husky in Slead team", {-0.43, -0.49, -0.36, -0.28, -0.8}},
    {"Pets/Farmyard Animals", "Cart Horse", {-0.46, -0.5, -0.31, -0.28, -0.79}},
    {"Pets/Farmyard Animals", "Chicken", {-0.46, -0.44, -0.19, -0.23, -0.68}},
    {"Pets/Farmyard Animals", "Doberman Guard Dog", {-0.47, -0.49, -0.54, -0.51, -1.03}},
    {"Fruits/Vegetables", "Apple", {-0.49, -0.5, -0.3, -0.24, -0.79}},
    {"Fruits/Vegetables", "Parsley", {-0.53, -0.51, -0.29, -0.29, -0.83}},
    {"Fruits/Vegetables", "Olive", {-0.46, -0.53, -0.41, -0.26, -0.86}},
    {"Fruits/Vegetables", "Chili Pepper", {-0.53, -0.46, -0.29, -0.29, -0.83}},
    {"Fruits/Vegetables", "Broccoli", {-0.58, -0.49, -0.21, -0.28, -0.83}},
    {"Fruits/Vegetables", "Root Ginger", {-0.46, -0.46, -0.33, -0.24, -0.74}},
    {"Fruits/Vegetables", "Pumpkin", {-0.43, -0.51, -0.29, -0.13, -0.68}},
    {"Fruits/Vegetables", "Raisin", {-0.39, -0.51, -0.46, -0.33, -0.86}},
    {"Fruits/Vegetables", "Acorn", {-0.36, -0.44, -0.39, -0.36, -0.84}},
    {"Fruits/Vegetables", "Mustard", {-0.44, -0.45, -0.43, -0.38, -0.81}},
    {"Fruits/Vegetables", "Rice", {-0.32, -0.34, -0.28, -0.29, -0.61}},
    {"Fruits/Vegetables", "Tomato", {-0.56, -0.55, -0.33, -0.24, -0.86}},
    {"Fruits/Vegetables", "Coconut", {-0.33, -0.44, -0.37, -0.33, -0.79}},
    {"Fruits/Vegetables", "Mushroom", {-0.33, -0.33, -0.26, -0.24, -0.61}},
    {"Fruits/Vegetables", "Wheat", {-0.38, -0.44, -0.38, -0.26, -0.73}},
    {"Fruits/Vegetables", "Green Pepper", {-0.5, -0.49, -0.23, -0.26, -0.76}},
    {"Fruits/Vegetables", "Watercress", {-0.45, -0.51, -0.24, -0.2, -0.73}},
    {"Fruits/Vegetables", "Peanut", {-0.41, -0.43, -0.3, -0.33, -0.8}},
    {"Fruits/Vegetables", "Black Pepper", {-0.38, -0.46, -0.31, -0.23, -0.71}},
    {"Fruits/Vegetables", "Garlic", {-0.5, -0.49, -0.33, -0.31, -0.83}},
    {"Fruits/Vegetables", "Yam", {-0.45, -0.58, -0.38, -0.24, -0.91}},
    {"Fruits/Vegetables", "Elderberry", {-0.36, -0.52, -0.39, -0.28, -0.8}},
    {"Fruits/Vegetables", "Almond", {-0.33, -0.42, -0.43, -0.37, -0.8}},
    {"Fruits/Vegetables", "Lentils", {-0.38, -0.41, -0.33, -0.26, -0.71}},
};
// clang-format on

}  // namespace

std::span<const BundledRow> bundled_rows() noexcept { return kRows; }

std::vector<LabeledDeviation> load_bundled() {
    std::vector<LabeledDeviation> out;
    out.reserve(std::size(kRows));
    for (const auto& r : kRows) {
        const auto& v = r.values;
        out.push_back({std::string(r.pair), std::string(r.exemplar), {v[0], v[1], v[2], v[3], v[4]}});
    }
    return out;
}

std::vector<std::string> bundled_pairs() {
    std::vector<std::string> out;
    for (const auto& r : kRows) {
        if (out.empty() || out.back() != r.pair) out.emplace_back(r.pair);
    }
    return out;
}

}  // namespace fockbench
