#![allow(clippy::excessive_precision)] // frozen reference digits

// erf reference values on [-6, 6], 61 points, computed with 30-digit arithmetic.
pub const ERF_TABLE: &[(f64, f64)] = &[
    (-6.0000000000000000, -0.99999999999999998),
    (-5.8000000000000000, -0.99999999999999976),
    (-5.6000000000000000, -0.99999999999999762),
    (-5.4000000000000000, -0.99999999999997772),
    (-5.2000000000000000, -0.99999999999980751),
    (-5.0000000000000000, -0.99999999999846254),
    (-4.8000000000000000, -0.99999999998864786),
    (-4.6000000000000000, -0.99999999992250400),
    (-4.4000000000000000, -0.99999999951082897),
    (-4.2000000000000000, -0.99999999714450582),
    (-4.0000000000000000, -0.99999998458274210),
    (-3.8000000000000000, -0.99999992299607254),
    (-3.6000000000000000, -0.99999964413700699),
    (-3.4000000000000000, -0.99999847800663714),
    (-3.2000000000000000, -0.99999397423884824),
    (-3.0000000000000000, -0.99997790950300141),
    (-2.8000000000000000, -0.99992498680533454),
    (-2.6000000000000000, -0.99976396558347065),
    (-2.4000000000000000, -0.99931148610335492),
    (-2.2000000000000000, -0.99813715370201811),
    (-2.0000000000000000, -0.99532226501895273),
    (-1.8000000000000000, -0.98909050163573071),
    (-1.6000000000000000, -0.97634838334464401),
    (-1.4000000000000000, -0.95228511976264881),
    (-1.2000000000000000, -0.91031397822963538),
    (-1.0000000000000000, -0.84270079294971487),
    (-0.80000000000000000, -0.74210096470766049),
    (-0.60000000000000000, -0.60385609084792592),
    (-0.40000000000000000, -0.42839235504666846),
    (-0.20000000000000000, -0.22270258921047845),
    (0.0, 0.0),
    (0.20000000000000000, 0.22270258921047845),
    (0.40000000000000000, 0.42839235504666846),
    (0.60000000000000000, 0.60385609084792592),
    (0.80000000000000000, 0.74210096470766049),
    (1.0000000000000000, 0.84270079294971487),
    (1.2000000000000000, 0.91031397822963538),
    (1.4000000000000000, 0.95228511976264881),
    (1.6000000000000000, 0.97634838334464401),
    (1.8000000000000000, 0.98909050163573071),
    (2.0000000000000000, 0.99532226501895273),
    (2.2000000000000000, 0.99813715370201811),
    (2.4000000000000000, 0.99931148610335492),
    (2.6000000000000000, 0.99976396558347065),
    (2.8000000000000000, 0.99992498680533454),
    (3.0000000000000000, 0.99997790950300141),
    (3.2000000000000000, 0.99999397423884824),
    (3.4000000000000000, 0.99999847800663714),
    (3.6000000000000000, 0.99999964413700699),
    (3.8000000000000000, 0.99999992299607254),
    (4.0000000000000000, 0.99999998458274210),
    (4.2000000000000000, 0.99999999714450582),
    (4.4000000000000000, 0.99999999951082897),
    (4.6000000000000000, 0.99999999992250400),
    (4.8000000000000000, 0.99999999998864786),
    (5.0000000000000000, 0.99999999999846254),
    (5.2000000000000000, 0.99999999999980751),
    (5.4000000000000000, 0.99999999999997772),
    (5.6000000000000000, 0.99999999999999762),
    (5.8000000000000000, 0.99999999999999976),
    (6.0000000000000000, 0.99999999999999998),
];

// erfc reference values on [0, 8], 33 points.
pub const ERFC_TABLE: &[(f64, f64)] = &[
    (0.0, 1.0000000000000000),
    (0.25000000000000000, 0.72367360983176307),
    (0.50000000000000000, 0.47950012218695346),
    (0.75000000000000000, 0.28884436634648487),
    (1.0000000000000000, 0.15729920705028513),
    (1.2500000000000000, 0.077099871743541770),
    (1.5000000000000000, 0.033894853524689273),
    (1.7500000000000000, 0.013328328780817556),
    (2.0000000000000000, 0.0046777349810472658),
    (2.2500000000000000, 0.0014627165866811517),
    (2.5000000000000000, 0.00040695201744495894),
    (2.7500000000000000, 0.00010062192211963684),
    (3.0000000000000000, 2.2090496998585441e-5),
    (3.2500000000000000, 4.3027794636751218e-6),
    (3.5000000000000000, 7.4309837234141275e-7),
    (3.7500000000000000, 1.1372725656979665e-7),
    (4.0000000000000000, 1.5417257900280019e-8),
    (4.2500000000000000, 1.8505741373867425e-9),
    (4.5000000000000000, 1.9661604415428875e-10),
    (4.7500000000000000, 1.8485047721485311e-11),
    (5.0000000000000000, 1.5374597944280349e-12),
    (5.2500000000000000, 1.1310313266887154e-13),
    (5.5000000000000000, 7.3578479179743981e-15),
    (5.7500000000000000, 4.2321366174257376e-16),
    (6.0000000000000000, 2.1519736712498913e-17),
    (6.2500000000000000, 9.6722041318762540e-19),
    (6.5000000000000000, 3.8421483271206475e-20),
    (6.7500000000000000, 1.3487678893611301e-21),
    (7.0000000000000000, 4.1838256077794144e-23),
    (7.2500000000000000, 1.1466900814815012e-24),
    (7.5000000000000000, 2.7766493860305691e-26),
    (7.7500000000000000, 5.9397478595171462e-28),
    (8.0000000000000000, 1.1224297172982927e-29),
];

// standard normal CDF reference values on [-6, 6], 25 points.
pub const PHI_TABLE: &[(f64, f64)] = &[
    (-6.0000000000000000, 9.8658764503769814e-10),
    (-5.5000000000000000, 1.8989562465887719e-8),
    (-5.0000000000000000, 2.8665157187919391e-7),
    (-4.5000000000000000, 3.3976731247300604e-6),
    (-4.0000000000000000, 3.1671241833119921e-5),
    (-3.5000000000000000, 0.00023262907903552504),
    (-3.0000000000000000, 0.0013498980316300945),
    (-2.5000000000000000, 0.0062096653257761352),
    (-2.0000000000000000, 0.022750131948179207),
    (-1.5000000000000000, 0.066807201268858066),
    (-1.0000000000000000, 0.15865525393145705),
    (-0.50000000000000000, 0.30853753872598690),
    (0.0, 0.50000000000000000),
    (0.50000000000000000, 0.69146246127401310),
    (1.0000000000000000, 0.84134474606854295),
    (1.5000000000000000, 0.93319279873114193),
    (2.0000000000000000, 0.97724986805182079),
    (2.5000000000000000, 0.99379033467422386),
    (3.0000000000000000, 0.99865010196836991),
    (3.5000000000000000, 0.99976737092096447),
    (4.0000000000000000, 0.99996832875816688),
    (4.5000000000000000, 0.99999660232687527),
    (5.0000000000000000, 0.99999971334842812),
    (5.5000000000000000, 0.99999998101043753),
    (6.0000000000000000, 0.99999999901341235),
];
