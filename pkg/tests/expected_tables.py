"""Known POC Frobenius groups of order at most 15000, as
(order, kernel label, complement text), grouped by complement type."""

CYCLIC_2_GROUP = {
    (6, "C3", "C2"), (18, "C9", "C2"), (20, "C5", "C4"), (54, "C27", "C2"),
    (72, "C3^2", "C8"), (100, "C25", "C4"), (162, "C81", "C2"), (272, "C17", "C16"),
    (486, "C243", "C2"), (500, "C125", "C4"), (648, "C9^2", "C8"), (1458, "C729", "C2"),
    (2500, "C625", "C4"), (4374, "C2187", "C2"), (4624, "C289", "C16"),
    (5832, "C27^2", "C8"), (12500, "C3125", "C4"), (13122, "C6561", "C2"),
}

CYCLIC_23_GROUP = {
    (42, "C7", "C6"), (156, "C13", "C12"), (294, "C49", "C6"), (342, "C19", "C18"),
    (600, "C5^2", "C24"), (1332, "C37", "C36"), (2028, "C169", "C12"),
    (2058, "C343", "C6"), (2352, "C7^2", "C48"), (5256, "C73", "C72"),
    (6498, "C361", "C18"), (9312, "C97", "C96"), (11772, "C109", "C108"),
    (14406, "C2401", "C6"), (15000, "C25^2", "C24"),
}

NON_ABELIAN = {
    (600, "C5^2", "M(3,8,2)"), (600, "C5^2", "SL(2,3)"), (6480, "C3^4", "M(5,16,4)"),
    (14520, "C11^2", "SL(2,5)"), (15000, "C25^2", "M(3,8,2)"), (15000, "C25^2", "SL(2,3)"),
}

ALL = CYCLIC_2_GROUP | CYCLIC_23_GROUP | NON_ABELIAN
