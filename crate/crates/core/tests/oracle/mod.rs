// Frozen by an independent Python oracle (sympy, networkx); regenerate, do not edit.
#![allow(dead_code)]

pub struct Derived {
    pub file: &'static str,
    pub f: &'static [u64],
    pub betti_q: &'static [usize],
    pub betti_2: &'static [usize],
    pub betti_3: &'static [usize],
    pub as_det: &'static str,
    pub link_dets: &'static [&'static str],
    pub aut_order: Option<u64>,
}

pub const DERIVED: &[Derived] = &[
    Derived {
        file: "catalog/L31-12.tri",
        f: &[12, 66, 108, 54],
        betti_q: &[1, 0, 0, 1],
        betti_2: &[1, 0, 0, 1],
        betti_3: &[1, 1, 1, 1],
        as_det: "109132937791488",
        link_dets: &["134784", "134784", "134784", "134784", "134784", "134784", "133056", "133056", "133056", "112320", "112320", "112320"],
        aut_order: Some(6),
    },
    Derived {
        file: "catalog/RP3-11.tri",
        f: &[11, 51, 80, 40],
        betti_q: &[1, 0, 0, 1],
        betti_2: &[1, 1, 1, 1],
        betti_3: &[1, 0, 0, 1],
        as_det: "176947200000",
        link_dets: &["41616", "41616", "41616", "41616", "41616", "41616", "12096", "12096", "12096", "12096", "0"],
        aut_order: Some(48),
    },
    Derived {
        file: "catalog/S2xS2-11.tri",
        f: &[11, 55, 150, 170, 68],
        betti_q: &[1, 0, 2, 0, 1],
        betti_2: &[1, 0, 2, 0, 1],
        betti_3: &[1, 0, 2, 0, 1],
        as_det: "413199353578400",
        link_dets: &["2691771904", "2349607936", "2129877952", "1265288000", "1219460224", "1086197184", "1053587232", "903052800", "566897920", "504165376", "294850176"],
        aut_order: Some(1),
    },
    Derived {
        file: "catalog/S3xS2-a-12.tri",
        f: &[12, 66, 220, 390, 336, 112],
        betti_q: &[1, 0, 1, 1, 0, 1],
        betti_2: &[1, 0, 1, 1, 0, 1],
        betti_3: &[1, 0, 1, 1, 0, 1],
        as_det: "4471184572226676864",
        link_dets: &["20914897156800", "20508898815000", "20089439072000", "19370269890600", "18759053184000", "18200766978000", "18038537444000", "17705889744400", "17591922980000", "16818928503200", "15787503314400", "14882849940000"],
        aut_order: Some(1),
    },
    Derived {
        file: "catalog/S3xS3-a-13.tri",
        f: &[13, 78, 286, 715, 1014, 728, 208],
        betti_q: &[1, 0, 0, 2, 0, 0, 1],
        betti_2: &[1, 0, 0, 2, 0, 0, 1],
        betti_3: &[1, 0, 0, 2, 0, 0, 1],
        as_det: "745714154823444619853824",
        link_dets: &["3726879356700291456", "3720483778054022784", "3699718198172075520", "3568663378425261312", "3492554827150198656", "3488831054917391232", "3472960668728592384", "3445081475901238656", "3394093377958641792", "3291570396172025856", "3288016156240521216", "3254083204857964416", "3237437166596148096"],
        aut_order: None,
    },
    Derived {
        file: "catalog/S3xtS1-12.tri",
        f: &[12, 60, 120, 120, 48],
        betti_q: &[1, 1, 0, 0, 0],
        betti_2: &[1, 1, 0, 1, 1],
        betti_3: &[1, 1, 0, 0, 0],
        as_det: "4871548424400",
        link_dets: &["10349904", "10349904", "9850000", "8962896", "8962896", "1305600", "1305600", "1305600", "1305600", "145424", "145424", "1296"],
        aut_order: Some(1),
    },
    Derived {
        file: "catalog/csaszar-torus.tri",
        f: &[7, 21, 14],
        betti_q: &[1, 2, 1],
        betti_2: &[1, 2, 1],
        betti_3: &[1, 2, 1],
        as_det: "73728",
        link_dets: &["0", "0", "0", "0", "0", "0", "0"],
        aut_order: Some(42),
    },
    Derived {
        file: "fixtures/CP2-9.tri",
        f: &[9, 36, 84, 90, 36],
        betti_q: &[1, 0, 1, 0, 1],
        betti_2: &[1, 0, 1, 0, 1],
        betti_3: &[1, 0, 1, 0, 1],
        as_det: "10000000000",
        link_dets: &["2963520", "2963520", "2963520", "2963520", "2963520", "2963520", "2963520", "2963520", "2963520"],
        aut_order: Some(54),
    },
    Derived {
        file: "fixtures/RP2-6.tri",
        f: &[6, 15, 10],
        betti_q: &[1, 0, 0],
        betti_2: &[1, 1, 1],
        betti_3: &[1, 0, 0],
        as_det: "3645",
        link_dets: &["4", "4", "4", "4", "4", "4"],
        aut_order: Some(60),
    },
    Derived {
        file: "constructed/orient3.tri",
        f: &[12, 48, 72, 36],
        betti_q: &[1, 1, 1, 1],
        betti_2: &[1, 1, 1, 1],
        betti_3: &[1, 1, 1, 1],
        as_det: "27405582336",
        link_dets: &["2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304"],
        aut_order: Some(24),
    },
    Derived {
        file: "constructed/rp3-l31.tri",
        f: &[19, 111, 184, 92],
        betti_q: &[1, 0, 0, 1],
        betti_2: &[1, 1, 1, 1],
        betti_3: &[1, 1, 1, 1],
        as_det: "15445827345991017267200",
        link_dets: &[],
        aut_order: None,
    },
    Derived {
        file: "constructed/s2.tri",
        f: &[4, 6, 4],
        betti_q: &[1, 0, 1],
        betti_2: &[1, 0, 1],
        betti_3: &[1, 0, 1],
        as_det: "9",
        link_dets: &["4", "4", "4", "4"],
        aut_order: Some(24),
    },
    Derived {
        file: "constructed/s2xs2-16.tri",
        f: &[16, 84, 216, 240, 96],
        betti_q: &[1, 0, 2, 0, 1],
        betti_2: &[1, 0, 2, 0, 1],
        betti_3: &[1, 0, 2, 0, 1],
        as_det: "53675087588710560000",
        link_dets: &["199592122810368", "199592122810368", "20004831232", "20004831232", "20004831232", "20004831232", "3196454400", "3196454400", "94279680", "94279680", "1317888", "1317888", "1317888", "1317888", "0", "0"],
        aut_order: Some(4),
    },
    Derived {
        file: "constructed/s3.tri",
        f: &[5, 10, 10, 5],
        betti_q: &[1, 0, 0, 1],
        betti_2: &[1, 0, 0, 1],
        betti_3: &[1, 0, 0, 1],
        as_det: "16",
        link_dets: &["9", "9", "9", "9", "9"],
        aut_order: Some(120),
    },
    Derived {
        file: "constructed/t2xs2-28.tri",
        f: &[28, 252, 728, 840, 336],
        betti_q: &[1, 2, 2, 2, 1],
        betti_2: &[1, 2, 2, 2, 1],
        betti_3: &[1, 2, 2, 2, 1],
        as_det: "1903766977827498527320736988420773976421171200",
        link_dets: &[],
        aut_order: None,
    },
    Derived {
        file: "constructed/twisted3.tri",
        f: &[12, 48, 72, 36],
        betti_q: &[1, 1, 0, 0],
        betti_2: &[1, 1, 1, 1],
        betti_3: &[1, 1, 0, 0],
        as_det: "28332523520",
        link_dets: &["11232", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "2304", "576"],
        aut_order: Some(2),
    },
];

/// `(d, n, f)` for boundary complexes of cyclic polytopes, by Gale evenness.
pub const CYCLIC: &[(usize, u64, &[u64])] = &[
    (2, 3, &[3, 3]),
    (2, 4, &[4, 4]),
    (2, 5, &[5, 5]),
    (2, 6, &[6, 6]),
    (2, 7, &[7, 7]),
    (2, 8, &[8, 8]),
    (2, 9, &[9, 9]),
    (2, 10, &[10, 10]),
    (2, 11, &[11, 11]),
    (3, 4, &[4, 6, 4]),
    (3, 5, &[5, 9, 6]),
    (3, 6, &[6, 12, 8]),
    (3, 7, &[7, 15, 10]),
    (3, 8, &[8, 18, 12]),
    (3, 9, &[9, 21, 14]),
    (3, 10, &[10, 24, 16]),
    (3, 11, &[11, 27, 18]),
    (4, 5, &[5, 10, 10, 5]),
    (4, 6, &[6, 15, 18, 9]),
    (4, 7, &[7, 21, 28, 14]),
    (4, 8, &[8, 28, 40, 20]),
    (4, 9, &[9, 36, 54, 27]),
    (4, 10, &[10, 45, 70, 35]),
    (4, 11, &[11, 55, 88, 44]),
    (5, 6, &[6, 15, 20, 15, 6]),
    (5, 7, &[7, 21, 34, 30, 12]),
    (5, 8, &[8, 28, 52, 50, 20]),
    (5, 9, &[9, 36, 74, 75, 30]),
    (5, 10, &[10, 45, 100, 105, 42]),
    (5, 11, &[11, 55, 130, 140, 56]),
    (6, 7, &[7, 21, 35, 35, 21, 7]),
    (6, 8, &[8, 28, 56, 68, 48, 16]),
    (6, 9, &[9, 36, 84, 117, 90, 30]),
    (6, 10, &[10, 45, 120, 185, 150, 50]),
    (6, 11, &[11, 55, 165, 275, 231, 77]),
];
