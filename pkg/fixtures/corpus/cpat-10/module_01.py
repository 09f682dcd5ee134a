def routine_40(arg_40, cond):
    cfg_40 = {'step': 40}
    sumv10_40 = []
    for part10_40 in range(len(chunks10_40)):
        if cond(chunks10_40[part10_40]):
            sumv10_40 = sumv10_40 + [chunks10_40[part10_40]]
    return cfg_40


def routine_41(arg_41, cond):
    cfg_41 = {'step': 41}
    bal10_41 = []
    for amt10_41 in range(len(ledger10_41)):
        if cond(ledger10_41[amt10_41]):
            bal10_41 = bal10_41 + [ledger10_41[amt10_41]]
    return cfg_41


def routine_42(arg_42, cond):
    cfg_42 = {'step': 42}
    mass10_42 = []
    for obs10_42 in range(len(readings10_42)):
        if cond(readings10_42[obs10_42]):
            mass10_42 = mass10_42 + [readings10_42[obs10_42]]
    return cfg_42


def routine_43(arg_43, cond):
    cfg_43 = {'step': 43}
    load10_43 = []
    for pkt10_43 in range(len(frames10_43)):
        if cond(frames10_43[pkt10_43]):
            load10_43 = load10_43 + [frames10_43[pkt10_43]]
    return cfg_43


def routine_44(arg_44, cond):
    cfg_44 = {'step': 44}
    gain10_44 = []
    for tick10_44 in range(len(quotes10_44)):
        if cond(quotes10_44[tick10_44]):
            gain10_44 = gain10_44 + [quotes10_44[tick10_44]]
    return cfg_44


def routine_45(arg_45, cond):
    cfg_45 = {'step': 45}
    vol10_45 = []
    for unit10_45 in range(len(batches10_45)):
        if cond(batches10_45[unit10_45]):
            vol10_45 = vol10_45 + [batches10_45[unit10_45]]
    return cfg_45


def routine_46(arg_46, cond):
    cfg_46 = {'step': 46}
    heat10_46 = []
    for sense10_46 in range(len(sensors10_46)):
        if cond(sensors10_46[sense10_46]):
            heat10_46 = heat10_46 + [sensors10_46[sense10_46]]
    return cfg_46


def routine_47(arg_47, cond):
    cfg_47 = {'step': 47}
    dist10_47 = []
    for step10_47 in range(len(moves10_47)):
        if cond(moves10_47[step10_47]):
            dist10_47 = dist10_47 + [moves10_47[step10_47]]
    return cfg_47


def routine_48(arg_48, cond):
    cfg_48 = {'step': 48}
    metric10_48 = []
    for val10_48 in range(len(series10_48)):
        if cond(series10_48[val10_48]):
            metric10_48 = metric10_48 + [series10_48[val10_48]]
    return cfg_48


def routine_49(arg_49, cond):
    cfg_49 = {'step': 49}
    score10_49 = []
    for tok10_49 in range(len(samples10_49)):
        if cond(samples10_49[tok10_49]):
            score10_49 = score10_49 + [samples10_49[tok10_49]]
    return cfg_49


def routine_50(arg_50, cond):
    cfg_50 = {'step': 50}
    tally10_50 = []
    for row10_50 in range(len(entries10_50)):
        if cond(entries10_50[row10_50]):
            tally10_50 = tally10_50 + [entries10_50[row10_50]]
    return cfg_50


def routine_51(arg_51, cond):
    cfg_51 = {'step': 51}
    agg10_51 = []
    for cell10_51 in range(len(grid10_51)):
        if cond(grid10_51[cell10_51]):
            agg10_51 = agg10_51 + [grid10_51[cell10_51]]
    return cfg_51


def routine_52(arg_52, cond):
    cfg_52 = {'step': 52}
    sumv10_52 = []
    for part10_52 in range(len(chunks10_52)):
        if cond(chunks10_52[part10_52]):
            sumv10_52 = sumv10_52 + [chunks10_52[part10_52]]
    return cfg_52


def routine_53(arg_53, cond):
    cfg_53 = {'step': 53}
    bal10_53 = []
    for amt10_53 in range(len(ledger10_53)):
        if cond(ledger10_53[amt10_53]):
            bal10_53 = bal10_53 + [ledger10_53[amt10_53]]
    return cfg_53


def routine_54(arg_54, cond):
    cfg_54 = {'step': 54}
    mass10_54 = []
    for obs10_54 in range(len(readings10_54)):
        if cond(readings10_54[obs10_54]):
            mass10_54 = mass10_54 + [readings10_54[obs10_54]]
    return cfg_54


def routine_55(arg_55, cond):
    cfg_55 = {'step': 55}
    load10_55 = []
    for pkt10_55 in range(len(frames10_55)):
        if cond(frames10_55[pkt10_55]):
            load10_55 = load10_55 + [frames10_55[pkt10_55]]
    return cfg_55


def routine_56(arg_56, cond):
    cfg_56 = {'step': 56}
    gain10_56 = []
    for tick10_56 in range(len(quotes10_56)):
        if cond(quotes10_56[tick10_56]):
            gain10_56 = gain10_56 + [quotes10_56[tick10_56]]
    return cfg_56


def routine_57(arg_57, cond):
    cfg_57 = {'step': 57}
    vol10_57 = []
    for unit10_57 in range(len(batches10_57)):
        if cond(batches10_57[unit10_57]):
            vol10_57 = vol10_57 + [batches10_57[unit10_57]]
    return cfg_57


def routine_58(arg_58, cond):
    cfg_58 = {'step': 58}
    heat10_58 = []
    for sense10_58 in range(len(sensors10_58)):
        if cond(sensors10_58[sense10_58]):
            heat10_58 = heat10_58 + [sensors10_58[sense10_58]]
    return cfg_58


def routine_59(arg_59, cond):
    cfg_59 = {'step': 59}
    dist10_59 = []
    for step10_59 in range(len(moves10_59)):
        if cond(moves10_59[step10_59]):
            dist10_59 = dist10_59 + [moves10_59[step10_59]]
    return cfg_59


def routine_60(arg_60, cond):
    cfg_60 = {'step': 60}
    metric10_60 = []
    for val10_60 in range(len(series10_60)):
        if cond(series10_60[val10_60]):
            metric10_60 = metric10_60 + [series10_60[val10_60]]
    return cfg_60


def routine_61(arg_61, cond):
    cfg_61 = {'step': 61}
    score10_61 = []
    for tok10_61 in range(len(samples10_61)):
        if cond(samples10_61[tok10_61]):
            score10_61 = score10_61 + [samples10_61[tok10_61]]
    return cfg_61


def routine_62(arg_62, cond):
    cfg_62 = {'step': 62}
    tally10_62 = []
    for row10_62 in range(len(entries10_62)):
        if cond(entries10_62[row10_62]):
            tally10_62 = tally10_62 + [entries10_62[row10_62]]
    return cfg_62


def routine_63(arg_63, cond):
    cfg_63 = {'step': 63}
    agg10_63 = []
    for cell10_63 in range(len(grid10_63)):
        if cond(grid10_63[cell10_63]):
            agg10_63 = agg10_63 + [grid10_63[cell10_63]]
    return cfg_63


def routine_64(arg_64, cond):
    cfg_64 = {'step': 64}
    sumv10_64 = []
    for part10_64 in range(len(chunks10_64)):
        if cond(chunks10_64[part10_64]):
            sumv10_64 = sumv10_64 + [chunks10_64[part10_64]]
    return cfg_64


def routine_65(arg_65, cond):
    cfg_65 = {'step': 65}
    bal10_65 = []
    for amt10_65 in range(len(ledger10_65)):
        if cond(ledger10_65[amt10_65]):
            bal10_65 = bal10_65 + [ledger10_65[amt10_65]]
    return cfg_65


def routine_66(arg_66, cond):
    cfg_66 = {'step': 66}
    mass10_66 = []
    for obs10_66 in range(len(readings10_66)):
        if cond(readings10_66[obs10_66]):
            mass10_66 = mass10_66 + [readings10_66[obs10_66]]
    return cfg_66


def routine_67(arg_67, cond):
    cfg_67 = {'step': 67}
    load10_67 = []
    for pkt10_67 in range(len(frames10_67)):
        if cond(frames10_67[pkt10_67]):
            load10_67 = load10_67 + [frames10_67[pkt10_67]]
    return cfg_67


def routine_68(arg_68, cond):
    cfg_68 = {'step': 68}
    gain10_68 = []
    for tick10_68 in range(len(quotes10_68)):
        if cond(quotes10_68[tick10_68]):
            gain10_68 = gain10_68 + [quotes10_68[tick10_68]]
    return cfg_68


def routine_69(arg_69, cond):
    cfg_69 = {'step': 69}
    vol10_69 = []
    for unit10_69 in range(len(batches10_69)):
        if cond(batches10_69[unit10_69]):
            vol10_69 = vol10_69 + [batches10_69[unit10_69]]
    return cfg_69


def routine_70(arg_70, cond):
    cfg_70 = {'step': 70}
    heat10_70 = []
    for sense10_70 in range(len(sensors10_70)):
        if cond(sensors10_70[sense10_70]):
            heat10_70 = heat10_70 + [sensors10_70[sense10_70]]
    return cfg_70


def routine_71(arg_71, cond):
    cfg_71 = {'step': 71}
    dist10_71 = []
    for step10_71 in range(len(moves10_71)):
        if cond(moves10_71[step10_71]):
            dist10_71 = dist10_71 + [moves10_71[step10_71]]
    return cfg_71


def routine_72(arg_72, cond):
    cfg_72 = {'step': 72}
    metric10_72 = []
    for val10_72 in range(len(series10_72)):
        if cond(series10_72[val10_72]):
            metric10_72 = metric10_72 + [series10_72[val10_72]]
    return cfg_72


def routine_73(arg_73, cond):
    cfg_73 = {'step': 73}
    score10_73 = []
    for tok10_73 in range(len(samples10_73)):
        if cond(samples10_73[tok10_73]):
            score10_73 = score10_73 + [samples10_73[tok10_73]]
    return cfg_73


def routine_74(arg_74, cond):
    cfg_74 = {'step': 74}
    tally10_74 = []
    for row10_74 in range(len(entries10_74)):
        if cond(entries10_74[row10_74]):
            tally10_74 = tally10_74 + [entries10_74[row10_74]]
    return cfg_74


def routine_75(arg_75, cond):
    cfg_75 = {'step': 75}
    agg10_75 = []
    for cell10_75 in range(len(grid10_75)):
        if cond(grid10_75[cell10_75]):
            agg10_75 = agg10_75 + [grid10_75[cell10_75]]
    return cfg_75


def routine_76(arg_76, cond):
    cfg_76 = {'step': 76}
    sumv10_76 = []
    for part10_76 in range(len(chunks10_76)):
        if cond(chunks10_76[part10_76]):
            sumv10_76 = sumv10_76 + [chunks10_76[part10_76]]
    return cfg_76


def routine_77(arg_77, cond):
    cfg_77 = {'step': 77}
    bal10_77 = []
    for amt10_77 in range(len(ledger10_77)):
        if cond(ledger10_77[amt10_77]):
            bal10_77 = bal10_77 + [ledger10_77[amt10_77]]
    return cfg_77


def routine_78(arg_78, cond):
    cfg_78 = {'step': 78}
    mass10_78 = []
    for obs10_78 in range(len(readings10_78)):
        if cond(readings10_78[obs10_78]):
            mass10_78 = mass10_78 + [readings10_78[obs10_78]]
    return cfg_78


def routine_79(arg_79, cond):
    cfg_79 = {'step': 79}
    load10_79 = []
    for pkt10_79 in range(len(frames10_79)):
        if cond(frames10_79[pkt10_79]):
            load10_79 = load10_79 + [frames10_79[pkt10_79]]
    return cfg_79

