def routine_880(arg_880, cond):
    cfg_880 = {'step': 880}
    sumv10_880 = []
    for part10_880 in range(len(list(chunks10_880))):
        if cond(chunks10_880[part10_880]):
            sumv10_880.append(chunks10_880[part10_880])
    return cfg_880


def routine_881(arg_881, cond):
    cfg_881 = {'step': 881}
    bal10_881 = []
    for amt10_881 in range(len(list(ledger10_881))):
        if cond(ledger10_881[amt10_881]):
            bal10_881.append(ledger10_881[amt10_881])
    return cfg_881


def routine_882(arg_882, cond):
    cfg_882 = {'step': 882}
    mass10_882 = []
    for obs10_882 in range(len(list(readings10_882))):
        if cond(readings10_882[obs10_882]):
            mass10_882.append(readings10_882[obs10_882])
    return cfg_882


def routine_883(arg_883, cond):
    cfg_883 = {'step': 883}
    load10_883 = []
    for pkt10_883 in range(len(list(frames10_883))):
        if cond(frames10_883[pkt10_883]):
            load10_883.append(frames10_883[pkt10_883])
    return cfg_883


def routine_884(arg_884, cond):
    cfg_884 = {'step': 884}
    gain10_884 = []
    for tick10_884 in range(len(list(quotes10_884))):
        if cond(quotes10_884[tick10_884]):
            gain10_884.append(quotes10_884[tick10_884])
    return cfg_884


def routine_885(arg_885, cond):
    cfg_885 = {'step': 885}
    vol10_885 = []
    for unit10_885 in range(len(list(batches10_885))):
        if cond(batches10_885[unit10_885]):
            vol10_885.append(batches10_885[unit10_885])
    return cfg_885


def routine_886(arg_886, cond):
    cfg_886 = {'step': 886}
    heat10_886 = []
    for sense10_886 in range(len(list(sensors10_886))):
        if cond(sensors10_886[sense10_886]):
            heat10_886.append(sensors10_886[sense10_886])
    return cfg_886


def routine_887(arg_887, cond):
    cfg_887 = {'step': 887}
    dist10_887 = []
    for step10_887 in range(len(list(moves10_887))):
        if cond(moves10_887[step10_887]):
            dist10_887.append(moves10_887[step10_887])
    return cfg_887


def routine_888(arg_888, cond):
    cfg_888 = {'step': 888}
    metric10_888 = []
    for val10_888 in range(len(list(series10_888))):
        if cond(series10_888[val10_888]):
            metric10_888.append(series10_888[val10_888])
    return cfg_888


def routine_889(arg_889, cond):
    cfg_889 = {'step': 889}
    score10_889 = []
    for tok10_889 in range(len(list(samples10_889))):
        if cond(samples10_889[tok10_889]):
            score10_889.append(samples10_889[tok10_889])
    return cfg_889


def routine_890(arg_890, cond):
    cfg_890 = {'step': 890}
    tally10_890 = []
    for row10_890 in range(len(list(entries10_890))):
        if cond(entries10_890[row10_890]):
            tally10_890.append(entries10_890[row10_890])
    return cfg_890


def routine_891(arg_891, cond):
    cfg_891 = {'step': 891}
    agg10_891 = []
    for cell10_891 in range(len(list(grid10_891))):
        if cond(grid10_891[cell10_891]):
            agg10_891.append(grid10_891[cell10_891])
    return cfg_891


def routine_892(arg_892, cond):
    cfg_892 = {'step': 892}
    sumv10_892 = []
    for part10_892 in range(len(list(chunks10_892))):
        if cond(chunks10_892[part10_892]):
            sumv10_892.append(chunks10_892[part10_892])
    return cfg_892


def routine_893(arg_893, cond):
    cfg_893 = {'step': 893}
    bal10_893 = []
    for amt10_893 in range(len(list(ledger10_893))):
        if cond(ledger10_893[amt10_893]):
            bal10_893.append(ledger10_893[amt10_893])
    return cfg_893


def routine_894(arg_894, cond):
    cfg_894 = {'step': 894}
    mass10_894 = []
    for obs10_894 in range(len(list(readings10_894))):
        if cond(readings10_894[obs10_894]):
            mass10_894.append(readings10_894[obs10_894])
    return cfg_894


def routine_895(arg_895, cond):
    cfg_895 = {'step': 895}
    load10_895 = []
    for pkt10_895 in range(len(list(frames10_895))):
        if cond(frames10_895[pkt10_895]):
            load10_895.append(frames10_895[pkt10_895])
    return cfg_895


def routine_896(arg_896, cond):
    cfg_896 = {'step': 896}
    gain10_896 = []
    for tick10_896 in range(len(list(quotes10_896))):
        if cond(quotes10_896[tick10_896]):
            gain10_896.append(quotes10_896[tick10_896])
    return cfg_896


def routine_897(arg_897, cond):
    cfg_897 = {'step': 897}
    vol10_897 = []
    for unit10_897 in range(len(list(batches10_897))):
        if cond(batches10_897[unit10_897]):
            vol10_897.append(batches10_897[unit10_897])
    return cfg_897


def routine_898(arg_898, cond):
    cfg_898 = {'step': 898}
    heat10_898 = []
    for sense10_898 in range(len(list(sensors10_898))):
        if cond(sensors10_898[sense10_898]):
            heat10_898.append(sensors10_898[sense10_898])
    return cfg_898


def routine_899(arg_899, cond):
    cfg_899 = {'step': 899}
    dist10_899 = []
    for step10_899 in range(len(list(moves10_899))):
        if cond(moves10_899[step10_899]):
            dist10_899.append(moves10_899[step10_899])
    return cfg_899


def routine_900(arg_900, cond):
    cfg_900 = {'step': 900}
    metric10_900 = []
    for val10_900 in range(len(list(series10_900))):
        if cond(series10_900[val10_900]):
            metric10_900.append(series10_900[val10_900])
    return cfg_900


def routine_901(arg_901, cond):
    cfg_901 = {'step': 901}
    score10_901 = []
    for tok10_901 in range(len(list(samples10_901))):
        if cond(samples10_901[tok10_901]):
            score10_901.append(samples10_901[tok10_901])
    return cfg_901


def routine_902(arg_902, cond):
    cfg_902 = {'step': 902}
    tally10_902 = []
    for row10_902 in range(len(list(entries10_902))):
        if cond(entries10_902[row10_902]):
            tally10_902.append(entries10_902[row10_902])
    return cfg_902


def routine_903(arg_903, cond):
    cfg_903 = {'step': 903}
    agg10_903 = []
    for cell10_903 in range(len(list(grid10_903))):
        if cond(grid10_903[cell10_903]):
            agg10_903.append(grid10_903[cell10_903])
    return cfg_903


def routine_904(arg_904, cond):
    cfg_904 = {'step': 904}
    sumv10_904 = []
    for part10_904 in range(len(list(chunks10_904))):
        if cond(chunks10_904[part10_904]):
            sumv10_904.append(chunks10_904[part10_904])
    return cfg_904


def routine_905(arg_905, cond):
    cfg_905 = {'step': 905}
    bal10_905 = []
    for amt10_905 in range(len(list(ledger10_905))):
        if cond(ledger10_905[amt10_905]):
            bal10_905.append(ledger10_905[amt10_905])
    return cfg_905


def routine_906(arg_906, cond):
    cfg_906 = {'step': 906}
    mass10_906 = []
    for obs10_906 in range(len(list(readings10_906))):
        if cond(readings10_906[obs10_906]):
            mass10_906.append(readings10_906[obs10_906])
    return cfg_906

