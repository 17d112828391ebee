# Group enumeration, conjugacy classes and subgroups
