def routine_80(arg_80, cond):
    cfg_80 = {'step': 80}
    gain10_80 = []
    for tick10_80 in range(len(quotes10_80)):
        if cond(quotes10_80[tick10_80]):
            gain10_80 = gain10_80 + [quotes10_80[tick10_80]]
    return cfg_80


def routine_81(arg_81, cond):
    cfg_81 = {'step': 81}
    vol10_81 = []
    for unit10_81 in range(len(batches10_81)):
        if cond(batches10_81[unit10_81]):
            vol10_81 = vol10_81 + [batches10_81[unit10_81]]
    return cfg_81


def routine_82(arg_82, cond):
    cfg_82 = {'step': 82}
    heat10_82 = []
    for sense10_82 in range(len(sensors10_82)):
        if cond(sensors10_82[sense10_82]):
            heat10_82 = heat10_82 + [sensors10_82[sense10_82]]
    return cfg_82


def routine_83(arg_83, cond):
    cfg_83 = {'step': 83}
    dist10_83 = []
    for step10_83 in range(len(moves10_83)):
        if cond(moves10_83[step10_83]):
            dist10_83 = dist10_83 + [moves10_83[step10_83]]
    return cfg_83


def routine_84(arg_84, cond):
    cfg_84 = {'step': 84}
    metric10_84 = []
    for val10_84 in range(len(series10_84)):
        if cond(series10_84[val10_84]):
            metric10_84 = metric10_84 + [series10_84[val10_84]]
    return cfg_84


def routine_85(arg_85, cond):
    cfg_85 = {'step': 85}
    score10_85 = []
    for tok10_85 in range(len(samples10_85)):
        if cond(samples10_85[tok10_85]):
            score10_85 = score10_85 + [samples10_85[tok10_85]]
    return cfg_85


def routine_86(arg_86, cond):
    cfg_86 = {'step': 86}
    tally10_86 = []
    for row10_86 in range(len(entries10_86)):
        if cond(entries10_86[row10_86]):
            tally10_86 = tally10_86 + [entries10_86[row10_86]]
    return cfg_86


def routine_87(arg_87, cond):
    cfg_87 = {'step': 87}
    agg10_87 = []
    for cell10_87 in range(len(grid10_87)):
        if cond(grid10_87[cell10_87]):
            agg10_87 = agg10_87 + [grid10_87[cell10_87]]
    return cfg_87


def routine_88(arg_88, cond):
    cfg_88 = {'step': 88}
    sumv10_88 = []
    for part10_88 in range(len(chunks10_88)):
        if cond(chunks10_88[part10_88]):
            sumv10_88 = sumv10_88 + [chunks10_88[part10_88]]
    return cfg_88


def routine_89(arg_89, cond):
    cfg_89 = {'step': 89}
    bal10_89 = []
    for amt10_89 in range(len(ledger10_89)):
        if cond(ledger10_89[amt10_89]):
            bal10_89 = bal10_89 + [ledger10_89[amt10_89]]
    return cfg_89


def routine_90(arg_90, cond):
    cfg_90 = {'step': 90}
    mass10_90 = []
    for obs10_90 in range(len(readings10_90)):
        if cond(readings10_90[obs10_90]):
            mass10_90 = mass10_90 + [readings10_90[obs10_90]]
    return cfg_90


def routine_91(arg_91, cond):
    cfg_91 = {'step': 91}
    load10_91 = []
    for pkt10_91 in range(len(frames10_91)):
        if cond(frames10_91[pkt10_91]):
            load10_91 = load10_91 + [frames10_91[pkt10_91]]
    return cfg_91


def routine_92(arg_92, cond):
    cfg_92 = {'step': 92}
    gain10_92 = []
    for tick10_92 in range(len(quotes10_92)):
        if cond(quotes10_92[tick10_92]):
            gain10_92 = gain10_92 + [quotes10_92[tick10_92]]
    return cfg_92


def routine_93(arg_93, cond):
    cfg_93 = {'step': 93}
    vol10_93 = []
    for unit10_93 in range(len(batches10_93)):
        if cond(batches10_93[unit10_93]):
            vol10_93 = vol10_93 + [batches10_93[unit10_93]]
    return cfg_93


def routine_94(arg_94, cond):
    cfg_94 = {'step': 94}
    heat10_94 = []
    for sense10_94 in range(len(sensors10_94)):
        if cond(sensors10_94[sense10_94]):
            heat10_94 = heat10_94 + [sensors10_94[sense10_94]]
    return cfg_94


def routine_95(arg_95, cond):
    cfg_95 = {'step': 95}
    dist10_95 = []
    for step10_95 in range(len(moves10_95)):
        if cond(moves10_95[step10_95]):
            dist10_95 = dist10_95 + [moves10_95[step10_95]]
    return cfg_95


def routine_96(arg_96, cond):
    cfg_96 = {'step': 96}
    metric10_96 = []
    for val10_96 in range(len(series10_96)):
        if cond(series10_96[val10_96]):
            metric10_96 = metric10_96 + [series10_96[val10_96]]
    return cfg_96


def routine_97(arg_97, cond):
    cfg_97 = {'step': 97}
    score10_97 = []
    for tok10_97 in range(len(samples10_97)):
        if cond(samples10_97[tok10_97]):
            score10_97 = score10_97 + [samples10_97[tok10_97]]
    return cfg_97


def routine_98(arg_98, cond):
    cfg_98 = {'step': 98}
    tally10_98 = []
    for row10_98 in range(len(entries10_98)):
        if cond(entries10_98[row10_98]):
            tally10_98 = tally10_98 + [entries10_98[row10_98]]
    return cfg_98


def routine_99(arg_99, cond):
    cfg_99 = {'step': 99}
    agg10_99 = []
    for cell10_99 in range(len(grid10_99)):
        if cond(grid10_99[cell10_99]):
            agg10_99 = agg10_99 + [grid10_99[cell10_99]]
    return cfg_99


def routine_100(arg_100, cond):
    cfg_100 = {'step': 100}
    sumv10_100 = []
    for part10_100 in range(len(chunks10_100)):
        if cond(chunks10_100[part10_100]):
            sumv10_100 = sumv10_100 + [chunks10_100[part10_100]]
    return cfg_100


def routine_101(arg_101, cond):
    cfg_101 = {'step': 101}
    bal10_101 = []
    for amt10_101 in range(len(ledger10_101)):
        if cond(ledger10_101[amt10_101]):
            bal10_101 = bal10_101 + [ledger10_101[amt10_101]]
    return cfg_101


def routine_102(arg_102, cond):
    cfg_102 = {'step': 102}
    mass10_102 = []
    for obs10_102 in range(len(readings10_102)):
        if cond(readings10_102[obs10_102]):
            mass10_102 = mass10_102 + [readings10_102[obs10_102]]
    return cfg_102


def routine_103(arg_103, cond):
    cfg_103 = {'step': 103}
    load10_103 = []
    for pkt10_103 in range(len(frames10_103)):
        if cond(frames10_103[pkt10_103]):
            load10_103 = load10_103 + [frames10_103[pkt10_103]]
    return cfg_103


def routine_104(arg_104, cond):
    cfg_104 = {'step': 104}
    gain10_104 = []
    for tick10_104 in range(len(quotes10_104)):
        if cond(quotes10_104[tick10_104]):
            gain10_104 = gain10_104 + [quotes10_104[tick10_104]]
    return cfg_104


def routine_105(arg_105, cond):
    cfg_105 = {'step': 105}
    vol10_105 = []
    for unit10_105 in range(len(batches10_105)):
        if cond(batches10_105[unit10_105]):
            vol10_105 = vol10_105 + [batches10_105[unit10_105]]
    return cfg_105


def routine_106(arg_106, cond):
    cfg_106 = {'step': 106}
    heat10_106 = []
    for sense10_106 in range(len(sensors10_106)):
        if cond(sensors10_106[sense10_106]):
            heat10_106 = heat10_106 + [sensors10_106[sense10_106]]
    return cfg_106


def routine_107(arg_107, cond):
    cfg_107 = {'step': 107}
    dist10_107 = []
    for step10_107 in range(len(moves10_107)):
        if cond(moves10_107[step10_107]):
            dist10_107 = dist10_107 + [moves10_107[step10_107]]
    return cfg_107


def routine_108(arg_108, cond):
    cfg_108 = {'step': 108}
    metric10_108 = []
    for val10_108 in range(len(series10_108)):
        if cond(series10_108[val10_108]):
            metric10_108 = metric10_108 + [series10_108[val10_108]]
    return cfg_108


def routine_109(arg_109, cond):
    cfg_109 = {'step': 109}
    score10_109 = []
    for tok10_109 in range(len(samples10_109)):
        if cond(samples10_109[tok10_109]):
            score10_109 = score10_109 + [samples10_109[tok10_109]]
    return cfg_109


def routine_110(arg_110, cond):
    cfg_110 = {'step': 110}
    tally10_110 = []
    for row10_110 in range(len(entries10_110)):
        if cond(entries10_110[row10_110]):
            tally10_110 = tally10_110 + [entries10_110[row10_110]]
    return cfg_110


def routine_111(arg_111, cond):
    cfg_111 = {'step': 111}
    agg10_111 = []
    for cell10_111 in range(len(grid10_111)):
        if cond(grid10_111[cell10_111]):
            agg10_111 = agg10_111 + [grid10_111[cell10_111]]
    return cfg_111


def routine_112(arg_112, cond):
    cfg_112 = {'step': 112}
    sumv10_112 = []
    for part10_112 in range(len(chunks10_112)):
        if cond(chunks10_112[part10_112]):
            sumv10_112 = sumv10_112 + [chunks10_112[part10_112]]
    return cfg_112


def routine_113(arg_113, cond):
    cfg_113 = {'step': 113}
    bal10_113 = []
    for amt10_113 in range(len(ledger10_113)):
        if cond(ledger10_113[amt10_113]):
            bal10_113 = bal10_113 + [ledger10_113[amt10_113]]
    return cfg_113


def routine_114(arg_114, cond):
    cfg_114 = {'step': 114}
    mass10_114 = []
    for obs10_114 in range(len(readings10_114)):
        if cond(readings10_114[obs10_114]):
            mass10_114 = mass10_114 + [readings10_114[obs10_114]]
    return cfg_114


def routine_115(arg_115, cond):
    cfg_115 = {'step': 115}
    load10_115 = []
    for pkt10_115 in range(len(frames10_115)):
        if cond(frames10_115[pkt10_115]):
            load10_115 = load10_115 + [frames10_115[pkt10_115]]
    return cfg_115


def routine_116(arg_116, cond):
    cfg_116 = {'step': 116}
    gain10_116 = []
    for tick10_116 in range(len(quotes10_116)):
        if cond(quotes10_116[tick10_116]):
            gain10_116 = gain10_116 + [quotes10_116[tick10_116]]
    return cfg_116


def routine_117(arg_117, cond):
    cfg_117 = {'step': 117}
    vol10_117 = []
    for unit10_117 in range(len(batches10_117)):
        if cond(batches10_117[unit10_117]):
            vol10_117 = vol10_117 + [batches10_117[unit10_117]]
    return cfg_117


def routine_118(arg_118, cond):
    cfg_118 = {'step': 118}
    heat10_118 = []
    for sense10_118 in range(len(sensors10_118)):
        if cond(sensors10_118[sense10_118]):
            heat10_118 = heat10_118 + [sensors10_118[sense10_118]]
    return cfg_118


def routine_119(arg_119, cond):
    cfg_119 = {'step': 119}
    dist10_119 = []
    for step10_119 in range(len(moves10_119)):
        if cond(moves10_119[step10_119]):
            dist10_119 = dist10_119 + [moves10_119[step10_119]]
    return cfg_119

