//! Reference improvement rows for the catalog codes.
//!
//! One entry per table row: field size, length, dimension, design distance,
//! the shortening depth `s` reported against the best-known-codes database at
//! the time, the shortened parameters printed next to it, and the code tags
//! that attain the row.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub q: u32,
    pub n: u64,
    pub k: u64,
    pub d: u32,
    pub s: u64,
    /// Printed `[n - s, k - s, d]`.
    pub shortened: (u64, u64, u64),
    pub tags: &'static [&'static str],
}

const fn ref_row(
    q: u32,
    (n, k, d): (u64, u64, u32),
    s: u64,
    shortened: (u64, u64, u64),
    tags: &'static [&'static str],
) -> ReferenceRow {
    ReferenceRow { q, n, k, d, s, shortened, tags }
}

#[rustfmt::skip]
pub const REFERENCE_ROWS: &[ReferenceRow] = &[
    ref_row(49, (91, 80, 9), 10, (81, 70, 9), &["D2a", "D2b"]),
    ref_row(49, (91, 50, 39), 10, (81, 40, 39), &["D2a", "D2b"]),
    ref_row(49, (91, 79, 10), 10, (81, 69, 10), &["D2a", "D2b"]),
    ref_row(49, (91, 49, 40), 10, (81, 39, 40), &["D2a", "D2b"]),
    ref_row(49, (91, 78, 11), 10, (81, 68, 11), &["D2a", "D2b"]),
    ref_row(49, (91, 48, 41), 10, (81, 38, 41), &["D2a", "D2b"]),
    ref_row(49, (91, 77, 12), 10, (81, 67, 12), &["D2a", "D2b"]),
    ref_row(49, (91, 47, 42), 10, (81, 37, 42), &["D2a", "D2b"]),
    ref_row(49, (91, 76, 13), 10, (81, 66, 13), &["D2a", "D2b"]),
    ref_row(49, (91, 46, 43), 10, (81, 36, 43), &["D2a", "D2b"]),
    ref_row(49, (91, 75, 14), 10, (81, 65, 14), &["D2a", "D2b"]),
    ref_row(49, (91, 45, 44), 10, (81, 35, 44), &["D2a", "D2b"]),
    ref_row(49, (91, 74, 15), 10, (81, 64, 15), &["D2a", "D2b"]),
    ref_row(49, (91, 44, 45), 10, (81, 34, 45), &["D2a", "D2b"]),
    ref_row(49, (91, 73, 16), 10, (81, 63, 16), &["D2a", "D2b"]),
    ref_row(49, (91, 43, 46), 10, (81, 33, 46), &["D2a", "D2b"]),
    ref_row(49, (91, 72, 17), 10, (81, 62, 17), &["D2a", "D2b"]),
    ref_row(49, (91, 42, 47), 10, (81, 32, 47), &["D2a", "D2b"]),
    ref_row(49, (91, 71, 18), 10, (81, 61, 18), &["D2a", "D2b"]),
    ref_row(49, (91, 41, 48), 10, (81, 31, 48), &["D2a", "D2b"]),
    ref_row(49, (91, 70, 19), 10, (81, 60, 19), &["D2a", "D2b"]),
    ref_row(49, (91, 40, 49), 10, (81, 30, 49), &["D2a", "D2b"]),
    ref_row(49, (91, 69, 20), 10, (81, 59, 20), &["D2a", "D2b"]),
    ref_row(49, (91, 39, 50), 10, (81, 29, 50), &["D2a", "D2b"]),
    ref_row(49, (91, 68, 21), 10, (81, 58, 21), &["D2a", "D2b"]),
    ref_row(49, (91, 38, 51), 10, (81, 28, 51), &["D2a", "D2b"]),
    ref_row(49, (91, 67, 22), 10, (81, 57, 22), &["D2a", "D2b"]),
    ref_row(49, (91, 37, 52), 10, (81, 27, 52), &["D2a", "D2b"]),
    ref_row(49, (91, 66, 23), 10, (81, 56, 23), &["D2a", "D2b"]),
    ref_row(49, (91, 36, 53), 10, (81, 26, 53), &["D2a", "D2b"]),
    ref_row(49, (91, 65, 24), 10, (81, 55, 24), &["D2a", "D2b"]),
    ref_row(49, (147, 129, 12), 18, (129, 111, 12), &["E1"]),
    ref_row(49, (91, 64, 25), 10, (81, 54, 25), &["D2a", "D2b"]),
    ref_row(49, (147, 128, 13), 32, (115, 96, 13), &["E1"]),
    ref_row(49, (91, 63, 26), 10, (81, 53, 26), &["D2a", "D2b"]),
    ref_row(49, (147, 127, 14), 32, (115, 95, 14), &["E1"]),
    ref_row(49, (91, 62, 27), 10, (81, 52, 27), &["D2a", "D2b"]),
    ref_row(49, (147, 126, 15), 44, (103, 82, 15), &["E1"]),
    ref_row(49, (91, 61, 28), 10, (81, 51, 28), &["D2a", "D2b"]),
    ref_row(49, (147, 125, 16), 46, (101, 79, 16), &["E1"]),
    ref_row(49, (91, 60, 29), 10, (81, 50, 29), &["D2a", "D2b"]),
    ref_row(49, (147, 124, 17), 58, (89, 66, 17), &["E1"]),
    ref_row(49, (91, 59, 30), 10, (81, 49, 30), &["D2a", "D2b"]),
    ref_row(49, (147, 123, 18), 58, (89, 65, 18), &["E1"]),
    ref_row(49, (91, 58, 31), 10, (81, 48, 31), &["D2a", "D2b"]),
    ref_row(49, (147, 122, 19), 58, (89, 64, 19), &["E1"]),
    ref_row(49, (91, 57, 32), 10, (81, 47, 32), &["D2a", "D2b"]),
    ref_row(49, (147, 121, 20), 58, (89, 63, 20), &["E1"]),
    ref_row(49, (91, 56, 33), 10, (81, 46, 33), &["D2a", "D2b"]),
    ref_row(49, (147, 120, 21), 58, (89, 62, 21), &["E1"]),
    ref_row(49, (91, 55, 34), 10, (81, 45, 34), &["D2a", "D2b"]),
    ref_row(49, (147, 119, 22), 58, (89, 61, 22), &["E1"]),
    ref_row(49, (91, 54, 35), 10, (81, 44, 35), &["D2a", "D2b"]),
    ref_row(49, (147, 118, 23), 58, (89, 60, 23), &["E1"]),
    ref_row(49, (91, 53, 36), 10, (81, 43, 36), &["D2a", "D2b"]),
    ref_row(49, (147, 117, 24), 58, (89, 59, 24), &["E1"]),
    ref_row(49, (91, 52, 37), 10, (81, 42, 37), &["D2a", "D2b"]),
    ref_row(49, (147, 116, 25), 58, (89, 58, 25), &["E1"]),
    ref_row(49, (91, 51, 38), 10, (81, 41, 38), &["D2a", "D2b"]),
    ref_row(49, (147, 115, 26), 58, (89, 57, 26), &["E1"]),
    ref_row(49, (147, 114, 27), 58, (89, 56, 27), &["E1"]),
    ref_row(49, (175, 148, 19), 72, (103, 76, 19), &["D1a", "D1b"]),
    ref_row(49, (147, 113, 28), 58, (89, 55, 28), &["E1"]),
    ref_row(49, (175, 147, 20), 74, (101, 73, 20), &["D1a", "D1b"]),
    ref_row(49, (147, 112, 29), 58, (89, 54, 29), &["E1"]),
    ref_row(49, (175, 146, 21), 82, (93, 64, 21), &["D1a", "D1b"]),
    ref_row(49, (147, 111, 30), 58, (89, 53, 30), &["E1"]),
    ref_row(49, (175, 145, 22), 82, (93, 63, 22), &["D1a", "D1b"]),
    ref_row(49, (147, 110, 31), 58, (89, 52, 31), &["E1"]),
    ref_row(49, (175, 144, 23), 82, (93, 62, 23), &["D1a", "D1b"]),
    ref_row(49, (147, 109, 32), 58, (89, 51, 32), &["E1"]),
    ref_row(49, (175, 143, 24), 82, (93, 61, 24), &["D1a", "D1b"]),
    ref_row(49, (147, 108, 33), 58, (89, 50, 33), &["E1"]),
    ref_row(49, (175, 142, 25), 82, (93, 60, 25), &["D1a", "D1b"]),
    ref_row(49, (147, 107, 34), 58, (89, 49, 34), &["E1"]),
    ref_row(49, (175, 141, 26), 82, (93, 59, 26), &["D1a", "D1b"]),
    ref_row(49, (147, 106, 35), 58, (89, 48, 35), &["E1"]),
    ref_row(49, (175, 140, 27), 82, (93, 58, 27), &["D1a", "D1b"]),
    ref_row(49, (147, 105, 36), 58, (89, 47, 36), &["E1"]),
    ref_row(49, (175, 139, 28), 82, (93, 57, 28), &["D1a", "D1b"]),
    ref_row(49, (147, 104, 37), 58, (89, 46, 37), &["E1"]),
    ref_row(49, (175, 138, 29), 82, (93, 56, 29), &["D1a", "D1b"]),
    ref_row(49, (147, 103, 38), 58, (89, 45, 38), &["E1"]),
    ref_row(49, (175, 137, 30), 82, (93, 55, 30), &["D1a", "D1b"]),
    ref_row(49, (147, 102, 39), 58, (89, 44, 39), &["E1"]),
    ref_row(49, (175, 136, 31), 82, (93, 54, 31), &["D1a", "D1b"]),
    ref_row(49, (147, 101, 40), 58, (89, 43, 40), &["E1"]),
    ref_row(49, (175, 135, 32), 82, (93, 53, 32), &["D1a", "D1b"]),
    ref_row(49, (147, 100, 41), 58, (89, 42, 41), &["E1"]),
    ref_row(49, (175, 134, 33), 82, (93, 52, 33), &["D1a", "D1b"]),
    ref_row(49, (147, 99, 42), 58, (89, 41, 42), &["E1"]),
    ref_row(49, (175, 133, 34), 82, (93, 51, 34), &["D1a", "D1b"]),
    ref_row(49, (147, 98, 43), 58, (89, 40, 43), &["E1"]),
    ref_row(49, (175, 132, 35), 82, (93, 50, 35), &["D1a", "D1b"]),
    ref_row(49, (147, 97, 44), 58, (89, 39, 44), &["E1"]),
    ref_row(49, (175, 131, 36), 82, (93, 49, 36), &["D1a", "D1b"]),
    ref_row(49, (147, 96, 45), 58, (89, 38, 45), &["E1"]),
    ref_row(49, (175, 130, 37), 82, (93, 48, 37), &["D1a", "D1b"]),
    ref_row(49, (147, 95, 46), 58, (89, 37, 46), &["E1"]),
    ref_row(49, (175, 129, 38), 82, (93, 47, 38), &["D1a", "D1b"]),
    ref_row(49, (147, 94, 47), 58, (89, 36, 47), &["E1"]),
    ref_row(49, (175, 128, 39), 82, (93, 46, 39), &["D1a", "D1b"]),
    ref_row(49, (147, 93, 48), 58, (89, 35, 48), &["E1"]),
    ref_row(49, (175, 127, 40), 82, (93, 45, 40), &["D1a", "D1b"]),
    ref_row(49, (147, 92, 49), 58, (89, 34, 49), &["E1"]),
    ref_row(49, (175, 126, 41), 82, (93, 44, 41), &["D1a", "D1b"]),
    ref_row(49, (175, 157, 12), 46, (129, 111, 12), &["D1a", "D1b"]),
    ref_row(49, (175, 125, 42), 82, (93, 43, 42), &["D1a", "D1b"]),
    ref_row(49, (175, 155, 13), 25, (150, 130, 13), &["D1b"]),
    ref_row(49, (175, 124, 43), 82, (93, 42, 43), &["D1a", "D1b"]),
    ref_row(49, (175, 154, 14), 24, (151, 130, 14), &["D1a"]),
    ref_row(49, (175, 123, 44), 82, (93, 41, 44), &["D1a", "D1b"]),
    ref_row(49, (175, 153, 15), 60, (115, 93, 15), &["D1a"]),
    ref_row(49, (175, 122, 45), 82, (93, 40, 45), &["D1a", "D1b"]),
    ref_row(49, (175, 152, 15), 22, (153, 130, 15), &["D1b"]),
    ref_row(49, (175, 121, 46), 82, (93, 39, 46), &["D1a", "D1b"]),
    ref_row(49, (175, 151, 16), 46, (129, 105, 16), &["D1a", "D1b"]),
    ref_row(49, (175, 120, 47), 82, (93, 38, 47), &["D1a", "D1b"]),
    ref_row(49, (175, 150, 18), 74, (101, 76, 18), &["D1a", "D1b"]),
    ref_row(64, (176, 162, 10), 29, (147, 133, 10), &["D3b"]),
    ref_row(64, (176, 159, 12), 14, (162, 145, 12), &["D3a"]),
    ref_row(64, (176, 157, 14), 14, (162, 143, 14), &["D3a"]),
    ref_row(64, (256, 232, 15), 30, (226, 202, 15), &["C1a"]),
    ref_row(64, (256, 231, 16), 30, (226, 201, 16), &["C1a"]),
    ref_row(64, (256, 230, 16), 19, (237, 211, 16), &["C1b"]),
    ref_row(64, (256, 229, 18), 30, (226, 199, 18), &["C1b"]),
    ref_row(64, (256, 228, 18), 28, (228, 200, 18), &["C1a"]),
    ref_row(64, (256, 226, 20), 28, (228, 198, 20), &["C1a"]),
    ref_row(64, (256, 225, 21), 28, (228, 197, 21), &["C1a"]),
    ref_row(64, (256, 222, 24), 28, (228, 194, 24), &["C1a"]),
    ref_row(81, (225, 207, 12), 24, (201, 183, 12), &["B1", "E2"]),
    ref_row(81, (243, 225, 12), 42, (201, 183, 12), &["C4"]),
    ref_row(81, (243, 223, 13), 16, (227, 207, 13), &["C4"]),
    ref_row(81, (243, 222, 14), 16, (227, 206, 14), &["C4"]),
    ref_row(81, (243, 221, 15), 16, (227, 205, 15), &["C4"]),
    ref_row(81, (243, 220, 16), 16, (227, 204, 16), &["C4"]),
    ref_row(81, (243, 218, 18), 16, (227, 202, 18), &["C4"]),
    ref_row(81, (369, 339, 18), 25, (344, 314, 18), &["D4a", "D4b"]),
    ref_row(81, (369, 337, 19), 4, (365, 333, 19), &["D4a"]),
    ref_row(81, (369, 336, 20), 36, (333, 300, 20), &["D4a"]),
    ref_row(81, (369, 334, 21), 28, (341, 306, 21), &["D4a"]),
    ref_row(81, (369, 333, 23), 66, (303, 267, 23), &["D4a", "D4b"]),
    ref_row(81, (369, 332, 24), 66, (303, 266, 24), &["D4a", "D4b"]),
    ref_row(81, (369, 330, 25), 64, (305, 266, 25), &["D4b"]),
    ref_row(81, (369, 328, 27), 64, (305, 264, 27), &["D4a"]),
    ref_row(81, (369, 327, 28), 64, (305, 263, 28), &["D4a"]),
    ref_row(81, (369, 323, 32), 64, (305, 259, 32), &["D4a", "D4b"]),
    ref_row(256, (512, 495, 14), 186, (326, 309, 14), &["C2"]),
    ref_row(256, (512, 494, 16), 188, (324, 306, 16), &["C2"]),
    ref_row(256, (512, 493, 17), 188, (324, 305, 17), &["C2"]),
    ref_row(256, (512, 492, 18), 188, (324, 304, 18), &["C2"]),
    ref_row(256, (512, 491, 19), 188, (324, 303, 19), &["C2"]),
    ref_row(256, (512, 490, 20), 188, (324, 302, 20), &["C2"]),
    ref_row(256, (512, 489, 21), 188, (324, 301, 21), &["C2"]),
    ref_row(256, (512, 488, 22), 188, (324, 300, 22), &["C2"]),
    ref_row(256, (512, 487, 23), 188, (324, 299, 23), &["C2"]),
    ref_row(256, (512, 486, 24), 188, (324, 298, 24), &["C2"]),
    ref_row(256, (512, 485, 25), 188, (324, 297, 25), &["C2"]),
    ref_row(256, (512, 484, 26), 188, (324, 296, 26), &["C2"]),
    ref_row(256, (512, 483, 27), 188, (324, 295, 27), &["C2"]),
    ref_row(256, (512, 482, 28), 188, (324, 294, 28), &["C2"]),
    ref_row(256, (512, 481, 29), 188, (324, 293, 29), &["C2"]),
    ref_row(256, (512, 480, 30), 188, (324, 292, 30), &["C2"]),
    ref_row(256, (512, 479, 31), 188, (324, 291, 31), &["C2"]),
    ref_row(256, (512, 478, 32), 188, (324, 290, 32), &["C2"]),
    ref_row(256, (512, 477, 33), 188, (324, 289, 33), &["C2"]),
    ref_row(256, (512, 476, 34), 188, (324, 288, 34), &["C2"]),
    ref_row(256, (512, 475, 35), 188, (324, 287, 35), &["C2"]),
    ref_row(256, (512, 474, 36), 188, (324, 286, 36), &["C2"]),
    ref_row(256, (512, 473, 37), 188, (324, 285, 37), &["C2"]),
    ref_row(256, (512, 472, 38), 188, (324, 284, 38), &["C2"]),
    ref_row(256, (512, 471, 39), 188, (324, 283, 39), &["C2"]),
    ref_row(256, (512, 470, 40), 188, (324, 282, 40), &["C2"]),
    ref_row(256, (512, 469, 41), 188, (324, 281, 41), &["C2"]),
    ref_row(256, (512, 468, 42), 188, (324, 280, 42), &["C2"]),
    ref_row(256, (512, 467, 43), 188, (324, 279, 43), &["C2"]),
    ref_row(256, (512, 466, 44), 188, (324, 278, 44), &["C2"]),
    ref_row(256, (512, 465, 45), 188, (324, 277, 45), &["C2"]),
    ref_row(256, (512, 464, 46), 188, (324, 276, 46), &["C2"]),
    ref_row(256, (512, 463, 47), 188, (324, 275, 47), &["C2"]),
    ref_row(256, (512, 462, 48), 188, (324, 274, 48), &["C2"]),
    ref_row(256, (512, 461, 49), 188, (324, 273, 49), &["C2"]),
    ref_row(256, (512, 460, 50), 188, (324, 272, 50), &["C2"]),
    ref_row(256, (512, 459, 51), 188, (324, 271, 51), &["C2"]),
    ref_row(256, (512, 458, 52), 188, (324, 270, 52), &["C2"]),
    ref_row(256, (512, 457, 53), 188, (324, 269, 53), &["C2"]),
    ref_row(256, (512, 456, 54), 188, (324, 268, 54), &["C2"]),
    ref_row(256, (512, 455, 55), 188, (324, 267, 55), &["C2"]),
    ref_row(256, (512, 454, 56), 188, (324, 266, 56), &["C2"]),
    ref_row(256, (512, 453, 57), 188, (324, 265, 57), &["C2"]),
    ref_row(256, (512, 452, 58), 188, (324, 264, 58), &["C2"]),
    ref_row(256, (512, 451, 59), 188, (324, 263, 59), &["C2"]),
    ref_row(256, (512, 450, 60), 188, (324, 262, 60), &["C2"]),
    ref_row(256, (512, 449, 61), 188, (324, 261, 61), &["C2"]),
    ref_row(256, (512, 448, 62), 188, (324, 260, 62), &["C2"]),
    ref_row(256, (512, 447, 63), 188, (324, 259, 63), &["C2"]),
    ref_row(256, (512, 446, 64), 188, (324, 258, 64), &["C2"]),
    ref_row(256, (512, 445, 65), 188, (324, 257, 65), &["C2"]),
    ref_row(256, (512, 444, 66), 188, (324, 256, 66), &["C2"]),
    ref_row(256, (1024, 980, 27), 247, (777, 733, 27), &["C3"]),
    ref_row(256, (1024, 979, 28), 248, (776, 731, 28), &["C3"]),
    ref_row(256, (1024, 978, 30), 413, (611, 565, 30), &["C3"]),
    ref_row(256, (1024, 976, 32), 445, (579, 531, 32), &["C3"]),
    ref_row(256, (1024, 975, 33), 477, (547, 498, 33), &["C3"]),
    ref_row(256, (1024, 974, 35), 494, (530, 480, 35), &["C3"]),
    ref_row(256, (1024, 973, 36), 494, (530, 479, 36), &["C3"]),
    ref_row(256, (1024, 972, 40), 500, (524, 472, 40), &["C3"]),
    ref_row(256, (1024, 970, 41), 498, (526, 472, 41), &["C3"]),
    ref_row(256, (1024, 969, 42), 498, (526, 471, 42), &["C3"]),
    ref_row(256, (1024, 968, 43), 498, (526, 470, 43), &["C3"]),
    ref_row(256, (1024, 967, 44), 498, (526, 469, 44), &["C3"]),
    ref_row(256, (1024, 966, 45), 498, (526, 468, 45), &["C3"]),
    ref_row(256, (1024, 965, 46), 498, (526, 467, 46), &["C3"]),
    ref_row(256, (1024, 964, 47), 498, (526, 466, 47), &["C3"]),
    ref_row(256, (1024, 963, 48), 498, (526, 465, 48), &["C3"]),
    ref_row(256, (1024, 962, 49), 498, (526, 464, 49), &["C3"]),
    ref_row(256, (1024, 961, 50), 498, (526, 463, 50), &["C3"]),
    ref_row(256, (1024, 960, 51), 498, (526, 462, 51), &["C3"]),
    ref_row(256, (1024, 959, 52), 498, (526, 461, 52), &["C3"]),
    ref_row(256, (1024, 958, 53), 498, (526, 460, 53), &["C3"]),
    ref_row(256, (1024, 957, 54), 498, (526, 459, 54), &["C3"]),
    ref_row(256, (1024, 956, 55), 498, (526, 458, 55), &["C3"]),
];
