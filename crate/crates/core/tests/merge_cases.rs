//! One frozen instance per construction case. Each is checked against an
//! oracle independent of the assembly code: the replacement cycles are
//! re-validated edge by edge, cover exactly the replaced cycles' vertices,
//! and number strictly fewer.

use tough2k2::classifier::classify;
use tough2k2::merge::{
    rule_a_plus_independent, rule_a_type_edge, rule_b_edge_split_neighbors, rule_bad_successor,
    rule_zig_path, CheckOrMerge, MergeResult,
};
use tough2k2::{Graph, OrientedCycle, TwoFactor, VertexSet};

type Fixture = (
    &'static str,
    &'static str,
    &'static str,
    (
        usize,
        &'static [(usize, usize)],
        &'static [&'static [usize]],
    ),
);

const FIXTURES: &[Fixture] = &[
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q!=R,Q!=D,R!=C:u~v",
        (
            12,
            &[
                (0, 2),
                (0, 3),
                (0, 5),
                (0, 7),
                (0, 8),
                (0, 9),
                (0, 10),
                (0, 11),
                (1, 3),
                (1, 5),
                (1, 6),
                (1, 8),
                (1, 9),
                (1, 10),
                (1, 11),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 9),
                (2, 10),
                (2, 11),
                (3, 4),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 8),
                (3, 10),
                (3, 11),
                (4, 5),
                (4, 7),
                (4, 8),
                (4, 11),
                (5, 8),
                (5, 9),
                (5, 10),
                (6, 7),
                (6, 8),
                (6, 9),
                (6, 10),
                (6, 11),
                (7, 8),
                (7, 9),
                (7, 10),
                (7, 11),
                (8, 11),
                (9, 11),
                (10, 11),
            ],
            &[&[8, 4, 3], &[9, 6, 7], &[0, 5, 2], &[1, 10, 11]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R-other:u+~v",
        (
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 4),
                (1, 6),
                (1, 8),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 8),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
                (7, 8),
            ],
            &[&[0, 7, 8], &[1, 2, 4], &[6, 3, 5]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R-other:u+~v+",
        (
            10,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 8),
                (0, 9),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 6),
                (1, 8),
                (1, 9),
                (2, 3),
                (2, 6),
                (2, 7),
                (2, 9),
                (3, 4),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 8),
                (4, 5),
                (4, 7),
                (4, 8),
                (4, 9),
                (5, 6),
                (5, 9),
                (6, 7),
                (6, 8),
                (6, 9),
                (8, 9),
            ],
            &[&[3, 0, 5], &[8, 1, 9, 4], &[6, 7, 2]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R-other:u~v",
        (
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 8),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 7),
                (1, 8),
                (2, 3),
                (2, 4),
                (2, 7),
                (2, 8),
                (3, 5),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 7),
                (5, 7),
            ],
            &[&[6, 0, 3], &[1, 2, 8], &[4, 5, 7]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R-other:u~v+",
        (
            9,
            &[
                (0, 2),
                (0, 6),
                (0, 8),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 7),
                (1, 8),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 7),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 8),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 8),
                (6, 7),
                (6, 8),
                (7, 8),
            ],
            &[&[3, 2, 5], &[4, 1, 7], &[6, 0, 8]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R=C:u++~v",
        (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
            &[&[5, 4, 1], &[2, 3, 0]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R=C:u++~v+",
        (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
            &[&[4, 5, 1], &[3, 0, 2]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R=C:u+~v",
        (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
            &[&[1, 2, 5], &[4, 0, 3]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R=C:u+~v+",
        (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (3, 5),
                (4, 5),
            ],
            &[&[2, 3, 1], &[0, 4, 5]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=D,R=C:u~v+",
        (
            7,
            &[
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 6),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (4, 6),
            ],
            &[&[3, 5, 0, 2], &[1, 4, 6]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=R:u+v-on-Q",
        (
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 5),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 4),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 6),
                (2, 8),
                (3, 4),
                (3, 6),
                (3, 7),
                (3, 8),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
                (6, 8),
                (7, 8),
            ],
            &[&[2, 1, 4], &[7, 5, 0], &[8, 3, 6]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=R:u+~v",
        (
            10,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 3),
                (1, 5),
                (1, 6),
                (1, 8),
                (1, 9),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 7),
                (3, 4),
                (3, 7),
                (4, 5),
                (4, 8),
                (4, 9),
                (5, 7),
                (5, 8),
                (6, 7),
                (6, 9),
                (7, 8),
                (7, 9),
                (8, 9),
            ],
            &[&[7, 9, 6, 2], &[3, 0, 4], &[5, 1, 8]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=R:u+~v+",
        (
            9,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 3),
                (1, 5),
                (1, 7),
                (1, 8),
                (2, 3),
                (2, 4),
                (2, 6),
                (2, 8),
                (3, 4),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 8),
                (6, 7),
                (6, 8),
            ],
            &[&[0, 6, 7], &[2, 4, 3], &[1, 8, 5]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=R:u~v",
        (
            11,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 8),
                (0, 9),
                (0, 10),
                (1, 3),
                (1, 4),
                (1, 6),
                (1, 7),
                (1, 8),
                (1, 9),
                (1, 10),
                (2, 3),
                (2, 4),
                (2, 6),
                (2, 8),
                (2, 10),
                (3, 4),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 9),
                (3, 10),
                (4, 6),
                (4, 8),
                (4, 9),
                (5, 6),
                (5, 8),
                (6, 7),
                (6, 8),
                (7, 8),
            ],
            &[&[4, 9, 0], &[6, 7, 1], &[5, 3, 10, 2, 8]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,R=C,Q-other:u+~v",
        (
            10,
            &[
                (0, 1),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 9),
                (1, 2),
                (1, 4),
                (1, 6),
                (1, 8),
                (2, 5),
                (2, 7),
                (3, 4),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 9),
                (5, 6),
                (5, 7),
                (5, 8),
                (6, 7),
                (6, 9),
                (7, 8),
                (7, 9),
                (8, 9),
            ],
            &[&[9, 4, 0], &[2, 1, 8, 5], &[7, 6, 3]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,R=C,Q-other:u+~v+",
        (
            12,
            &[
                (0, 1),
                (0, 3),
                (0, 6),
                (0, 10),
                (0, 11),
                (1, 2),
                (1, 5),
                (1, 7),
                (1, 8),
                (1, 11),
                (2, 3),
                (2, 5),
                (2, 6),
                (2, 10),
                (2, 11),
                (3, 6),
                (3, 7),
                (3, 8),
                (3, 9),
                (4, 6),
                (4, 7),
                (4, 11),
                (5, 6),
                (5, 7),
                (5, 8),
                (5, 9),
                (5, 10),
                (5, 11),
                (6, 8),
                (6, 11),
                (7, 8),
                (7, 10),
                (7, 11),
                (8, 9),
                (8, 10),
                (8, 11),
                (9, 11),
            ],
            &[&[0, 10, 2, 1, 11], &[6, 4, 7, 3], &[8, 9, 5]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,R=C,Q-other:u~v",
        (
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 2),
                (1, 4),
                (1, 5),
                (1, 7),
                (1, 8),
                (2, 3),
                (2, 5),
                (2, 7),
                (2, 8),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
                (6, 8),
            ],
            &[&[6, 7, 3], &[5, 4, 0], &[1, 2, 8]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,R=C,Q-other:u~v+",
        (
            10,
            &[
                (0, 2),
                (0, 3),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 8),
                (2, 9),
                (3, 4),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 9),
                (4, 7),
                (5, 8),
                (5, 9),
                (6, 8),
                (6, 9),
                (7, 8),
                (7, 9),
            ],
            &[&[9, 2, 1, 6], &[5, 8, 0], &[3, 7, 4]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C=D,Q!=R:u~v",
        (
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 7),
                (0, 8),
                (1, 3),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 7),
                (2, 8),
                (3, 4),
                (3, 5),
                (3, 6),
                (3, 8),
                (5, 6),
                (5, 8),
                (6, 7),
                (7, 8),
            ],
            &[&[2, 0, 4], &[7, 1, 6], &[5, 8, 3]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C=D,Q=R:x+~v+,y+~u",
        (
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
            &[&[3, 1, 0, 5], &[2, 6, 4]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C=D,Q=R:x+~v+,y+~u+",
        (
            6,
            &[
                (0, 1),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
            &[&[2, 5, 1], &[0, 3, 4]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C=D,Q=R:x+~v,y+~u",
        (
            6,
            &[
                (0, 1),
                (0, 3),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
            ],
            &[&[4, 2, 3], &[1, 0, 5]],
        ),
    ),
    (
        "a-plus",
        "a-plus-ind",
        "C=D,Q=R:x+~v,y+~u+",
        (
            6,
            &[
                (0, 1),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
            &[&[2, 1, 3], &[5, 0, 4]],
        ),
    ),
    (
        "a-type",
        "no-a-type-edge",
        "D!=Q",
        (
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (1, 8),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 4),
                (3, 5),
                (3, 7),
                (3, 8),
                (4, 5),
                (4, 6),
                (4, 8),
                (5, 6),
                (5, 7),
                (5, 8),
                (6, 7),
            ],
            &[&[8, 4, 3], &[2, 5, 6], &[0, 1, 7]],
        ),
    ),
    (
        "a-type",
        "no-a-type-edge",
        "D=Q",
        (
            6,
            &[
                (0, 1),
                (0, 3),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
            ],
            &[&[4, 2, 3], &[1, 0, 5]],
        ),
    ),
    (
        "badsucc",
        "v-0-ind-b",
        "Q!=C,R=C:w+~v",
        (
            10,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 8),
                (0, 9),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 8),
                (1, 9),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 6),
                (3, 7),
                (3, 8),
                (3, 9),
                (4, 6),
                (4, 7),
                (4, 8),
                (5, 7),
                (6, 7),
                (6, 8),
                (6, 9),
                (7, 9),
            ],
            &[&[2, 4, 0, 5], &[6, 9, 7], &[1, 8, 3]],
        ),
    ),
    (
        "badsucc",
        "v-0-ind-b",
        "Q!=C,R=C:w+~v+",
        (
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 8),
                (1, 9),
                (2, 3),
                (2, 4),
                (2, 6),
                (2, 8),
                (3, 6),
                (3, 7),
                (4, 7),
                (4, 9),
                (5, 6),
                (5, 7),
                (6, 9),
                (7, 8),
                (7, 9),
            ],
            &[&[2, 3, 1, 8], &[9, 4, 7], &[0, 6, 5]],
        ),
    ),
    (
        "badsucc",
        "v-0-ind-b",
        "Q=C,R!=D",
        (
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 3),
                (1, 5),
                (1, 6),
                (1, 8),
                (1, 9),
                (2, 3),
                (2, 5),
                (2, 6),
                (2, 8),
                (2, 9),
                (3, 4),
                (3, 5),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 9),
                (5, 7),
                (5, 8),
                (6, 7),
                (7, 9),
            ],
            &[&[5, 8, 2], &[1, 0, 4, 9], &[6, 3, 7]],
        ),
    ),
    (
        "split",
        "full-b-neighbors",
        "Q!=C",
        (
            9,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 6),
                (2, 7),
                (2, 8),
                (3, 4),
                (3, 7),
                (3, 8),
                (4, 7),
                (5, 7),
                (5, 8),
                (6, 7),
                (7, 8),
            ],
            &[&[5, 8, 7], &[6, 0, 2], &[4, 1, 3]],
        ),
    ),
    (
        "split",
        "full-b-neighbors",
        "Q=C",
        (
            7,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 2),
                (1, 3),
                (1, 5),
                (2, 4),
                (2, 6),
                (3, 4),
                (4, 6),
                (5, 6),
            ],
            &[&[6, 0, 5], &[3, 4, 2, 1]],
        ),
    ),
    (
        "zig",
        "zig-path-on-c",
        "v~u+",
        (
            6,
            &[
                (0, 1),
                (0, 3),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
            ],
            &[&[4, 2, 3], &[1, 0, 5]],
        ),
    ),
    (
        "badsucc",
        "v-0-ind-b",
        "Q!=C,R-other",
        (
            13,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 8),
                (0, 9),
                (0, 12),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 10),
                (1, 11),
                (1, 12),
                (2, 3),
                (2, 4),
                (2, 6),
                (2, 8),
                (2, 10),
                (2, 11),
                (3, 6),
                (3, 7),
                (3, 8),
                (3, 10),
                (3, 11),
                (4, 5),
                (4, 6),
                (4, 7),
                (4, 8),
                (4, 9),
                (5, 6),
                (5, 10),
                (5, 11),
                (6, 7),
                (6, 8),
                (6, 9),
                (8, 11),
                (9, 10),
                (9, 11),
            ],
            &[&[4, 5, 10, 9], &[11, 2, 8], &[7, 6, 3], &[12, 0, 1]],
        ),
    ),
    // hand-built: x = 0, y = 3 on triangles with 1 ~ 4; x ~ 6, 7 and
    // y ~ 10, 11 on one 8-cycle; the only extra chord is 6 ~ 11
    (
        "a-plus",
        "a-plus-ind",
        "C!=D,Q=R:u~v+",
        (
            14,
            &[
                (0, 1),
                (0, 2),
                (0, 6),
                (0, 7),
                (1, 2),
                (1, 4),
                (3, 4),
                (3, 5),
                (3, 10),
                (3, 11),
                (4, 5),
                (6, 7),
                (6, 11),
                (6, 13),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 11),
                (11, 12),
                (12, 13),
            ],
            &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8, 9, 10, 11, 12, 13]],
        ),
    ),
];

fn build(n: usize, edges: &[(usize, usize)], cycles: &[&[usize]]) -> (Graph, TwoFactor) {
    let g = Graph::from_edges(n, edges).unwrap();
    let cs = cycles
        .iter()
        .map(|c| OrientedCycle::new(&g, c.to_vec()).unwrap())
        .collect();
    let f = TwoFactor::new(&g, cs).unwrap();
    (g, f)
}

fn check_merge(g: &Graph, f: &TwoFactor, m: &MergeResult) {
    assert!(m.replacement.len() < m.replaced.len());
    let mut before = VertexSet::new();
    for &id in &m.replaced {
        before.union_with(&f.cycle(id).vertex_set());
    }
    let mut after = VertexSet::new();
    let mut total = 0;
    for c in &m.replacement {
        let order = c.order();
        assert!(order.len() >= 3);
        for i in 0..order.len() {
            assert!(g.has_edge(order[i], order[(i + 1) % order.len()]));
        }
        total += order.len();
        after.union_with(&c.vertex_set());
    }
    assert_eq!(total, after.len(), "replacement cycles overlap");
    assert_eq!(before, after);
    assert_eq!(m.trace.cycles_before, f.len());
    assert_eq!(
        m.trace.cycles_after,
        f.len() - m.replaced.len() + m.replacement.len()
    );
    assert_eq!(m.apply(g, f).unwrap().len(), m.trace.cycles_after);
}

#[test]
fn every_case_fixture_merges_soundly() {
    for &(rule, claim, case, (n, edges, cycles)) in FIXTURES {
        let (g, f) = build(n, edges, cycles);
        let ctx = classify(&g, &f).unwrap();
        let designated = || ctx.designated().expect("designated cycle");
        let out = match rule {
            "a-type" => rule_a_type_edge(&g, &f, &ctx),
            "a-plus" => rule_a_plus_independent(&g, &f, &ctx),
            "split" => rule_b_edge_split_neighbors(&g, &f, &ctx, designated()),
            "badsucc" => rule_bad_successor(&g, &f, &ctx, designated()),
            "zig" => rule_zig_path(&g, &f, &ctx, designated()),
            other => panic!("unknown rule {other}"),
        };
        let Ok(CheckOrMerge::Merge(m)) = out else {
            panic!("{rule} {case}: expected a merge, got {out:?}");
        };
        assert_eq!(
            (m.trace.claim.as_str(), m.trace.case.as_str()),
            (claim, case)
        );
        check_merge(&g, &f, &m);
    }
}
