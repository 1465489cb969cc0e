#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcfm {

struct SliceSpan {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
};

/// Per-frame feature layout. Columns, in order: root angular velocity (1),
/// root XZ velocity (2), root height (1), local positions of the non-root
/// joints (3 each), velocities of all joints including the root (3 each),
/// rotations of the non-root joints (6 each), foot contacts (4).
/// For 22 joints this gives 263 features, for 21 joints 251.
struct PoseLayout {
  int joint_count = 0;
  int feature_dim = 0;
  SliceSpan root_angular_velocity;
  SliceSpan root_xz_velocity;
  SliceSpan root_height;
  SliceSpan joint_positions;
  SliceSpan joint_velocities;
  SliceSpan joint_rotations;
  SliceSpan foot_contacts;

  static PoseLayout for_joints(int joint_count);

  std::array<SliceSpan, 7> slices() const;
  void validate() const;
  bool operator==(const PoseLayout& other) const;
};

using FrameMatrix =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A motion clip: one row of features per frame. Frames are stored in
/// single precision, matching the on-disk format; math that needs double
/// precision converts at the boundary.
struct MotionSequence {
  FrameMatrix frames;
  float fps = 20.0f;
  PoseLayout layout;

  int frame_count() const { return static_cast<int>(frames.rows()); }
  void validate() const;

  /// Position slice as double, frame_count x 3*(joint_count-1).
  Eigen::MatrixXd joint_positions_d() const;
  /// Full feature matrix as double.
  Eigen::MatrixXd frames_d() const;
};

/// Closed prompt vocabulary. Prompt ids are dense 0..K-1; the reserved
/// empty-condition id is K.
struct ConditionVocab {
  std::vector<std::string> prompts;

  int prompt_count() const { return static_cast<int>(prompts.size()); }
  int null_id() const { return prompt_count(); }
  int total_ids() const { return prompt_count() + 1; }
  int id_of(const std::string& prompt) const;  // -1 when absent
};

struct NormStats {
  Eigen::VectorXd mean;
  Eigen::VectorXd std_dev;  // floored, strictly positive

  static constexpr double kStdFloor = 1e-8;
};

NormStats fit_normalization(const std::vector<MotionSequence>& dataset);
MotionSequence normalize(const MotionSequence& seq, const NormStats& stats);
MotionSequence denormalize(const MotionSequence& seq, const NormStats& stats);
Eigen::MatrixXd normalize_frames(const Eigen::MatrixXd& frames,
                                 const NormStats& stats);
Eigen::MatrixXd denormalize_frames(const Eigen::MatrixXd& frames,
                                   const NormStats& stats);

// ---------------------------------------------------------------------------
// Synthetic dataset
// ---------------------------------------------------------------------------

struct DatasetSpec {
  std::vector<std::string> families;  // see kFamilyNames
  int sequences_per_family = 200;
  double fps = 20.0;
  int min_frames = 40;
  int max_frames = 196;
  int joint_count = 7;
  /// Foot-contact speed threshold in length units per frame interval.
  double contact_threshold = 0.02;

  void validate() const;
};

inline constexpr std::array<const char*, 4> kFamilyNames = {
    "stand_still", "straight_walk", "circle_walk", "arm_wave"};

/// One non-root joint trajectory: a constant base plus a single-axis
/// sinusoid, so the jerk magnitude has the closed form A*w^3*|cos(w t + p)|.
struct JointOscillator {
  Eigen::Vector3d base = Eigen::Vector3d::Zero();
  Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
  double amplitude = 0.0;
  double omega = 0.0;  // rad/s
  double phase = 0.0;

  Eigen::Vector3d position(double t) const;
  Eigen::Vector3d velocity(double t) const;
  Eigen::Vector3d jerk(double t) const;
};

/// Analytic program for one sequence; rendering it at any fps is exact,
/// which is what makes ground-truth smoothness checkable.
struct MotionProgram {
  std::string family;
  std::string prompt;
  int frames = 0;
  double fps = 20.0;
  double root_height = 0.9;
  double yaw_rate = 0.0;                                 // rad/s
  Eigen::Vector2d root_velocity = Eigen::Vector2d::Zero();  // local (fwd, lat), m/s
  std::vector<JointOscillator> joints;  // joint_count - 1 entries

  double duration() const { return frames / fps; }
};

struct SyntheticDataset {
  std::vector<MotionSequence> motions;
  std::vector<int> condition_ids;
  ConditionVocab vocab;
};

std::vector<MotionProgram> plan_synthetic_dataset(const DatasetSpec& spec,
                                                  std::uint64_t seed);
MotionSequence render_program(const MotionProgram& program,
                              double contact_threshold);
SyntheticDataset generate_synthetic_dataset(const DatasetSpec& spec,
                                            std::uint64_t seed);

/// Contact matrix from heel/toe world positions (frame_count x 12, four xyz
/// triplets per row). An entry is 1 when the joint speed, first difference
/// times fps, is below `threshold` (length units per second). The last frame
/// copies the previous one.
Eigen::MatrixXd derive_foot_contacts(const Eigen::MatrixXd& heel_toe_positions,
                                     double fps, double threshold);

/// Root X-Z path reconstructed by integrating yaw and local velocity.
Eigen::MatrixXd root_xz_path(const MotionSequence& seq);

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

class MotionFileError : public std::runtime_error {
 public:
  enum class Kind { BadMagic, BadHeader, Truncated, NonFinite, Io };

  MotionFileError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

void write_motion_file(const MotionSequence& seq,
                       const std::filesystem::path& path);
MotionSequence read_motion_file(const std::filesystem::path& path);

struct ManifestEntry {
  std::string motion_path;  // relative to the manifest directory
  int condition_id = 0;
  std::string prompt;
};

void write_manifest(const std::vector<ManifestEntry>& entries,
                    const std::filesystem::path& path);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Loads every motion referenced by a manifest; vocabulary is rebuilt from
/// the (condition_id, prompt) pairs.
SyntheticDataset load_dataset(const std::filesystem::path& manifest_path);

}  // namespace mcfm
