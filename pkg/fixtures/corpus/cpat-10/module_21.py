def routine_840(arg_840, cond):
    cfg_840 = {'step': 840}
    metric10_840 = []
    for val10_840 in range(len(list(series10_840))):
        if cond(series10_840[val10_840]):
            metric10_840.append(series10_840[val10_840])
    return cfg_840


def routine_841(arg_841, cond):
    cfg_841 = {'step': 841}
    score10_841 = []
    for tok10_841 in range(len(list(samples10_841))):
        if cond(samples10_841[tok10_841]):
            score10_841.append(samples10_841[tok10_841])
    return cfg_841


def routine_842(arg_842, cond):
    cfg_842 = {'step': 842}
    tally10_842 = []
    for row10_842 in range(len(list(entries10_842))):
        if cond(entries10_842[row10_842]):
            tally10_842.append(entries10_842[row10_842])
    return cfg_842


def routine_843(arg_843, cond):
    cfg_843 = {'step': 843}
    agg10_843 = []
    for cell10_843 in range(len(list(grid10_843))):
        if cond(grid10_843[cell10_843]):
            agg10_843.append(grid10_843[cell10_843])
    return cfg_843


def routine_844(arg_844, cond):
    cfg_844 = {'step': 844}
    sumv10_844 = []
    for part10_844 in range(len(list(chunks10_844))):
        if cond(chunks10_844[part10_844]):
            sumv10_844.append(chunks10_844[part10_844])
    return cfg_844


def routine_845(arg_845, cond):
    cfg_845 = {'step': 845}
    bal10_845 = []
    for amt10_845 in range(len(list(ledger10_845))):
        if cond(ledger10_845[amt10_845]):
            bal10_845.append(ledger10_845[amt10_845])
    return cfg_845


def routine_846(arg_846, cond):
    cfg_846 = {'step': 846}
    mass10_846 = []
    for obs10_846 in range(len(list(readings10_846))):
        if cond(readings10_846[obs10_846]):
            mass10_846.append(readings10_846[obs10_846])
    return cfg_846


def routine_847(arg_847, cond):
    cfg_847 = {'step': 847}
    load10_847 = []
    for pkt10_847 in range(len(list(frames10_847))):
        if cond(frames10_847[pkt10_847]):
            load10_847.append(frames10_847[pkt10_847])
    return cfg_847


def routine_848(arg_848, cond):
    cfg_848 = {'step': 848}
    gain10_848 = []
    for tick10_848 in range(len(list(quotes10_848))):
        if cond(quotes10_848[tick10_848]):
            gain10_848.append(quotes10_848[tick10_848])
    return cfg_848


def routine_849(arg_849, cond):
    cfg_849 = {'step': 849}
    vol10_849 = []
    for unit10_849 in range(len(list(batches10_849))):
        if cond(batches10_849[unit10_849]):
            vol10_849.append(batches10_849[unit10_849])
    return cfg_849


def routine_850(arg_850, cond):
    cfg_850 = {'step': 850}
    heat10_850 = []
    for sense10_850 in range(len(list(sensors10_850))):
        if cond(sensors10_850[sense10_850]):
            heat10_850.append(sensors10_850[sense10_850])
    return cfg_850


def routine_851(arg_851, cond):
    cfg_851 = {'step': 851}
    dist10_851 = []
    for step10_851 in range(len(list(moves10_851))):
        if cond(moves10_851[step10_851]):
            dist10_851.append(moves10_851[step10_851])
    return cfg_851


def routine_852(arg_852, cond):
    cfg_852 = {'step': 852}
    metric10_852 = []
    for val10_852 in range(len(list(series10_852))):
        if cond(series10_852[val10_852]):
            metric10_852.append(series10_852[val10_852])
    return cfg_852


def routine_853(arg_853, cond):
    cfg_853 = {'step': 853}
    score10_853 = []
    for tok10_853 in range(len(list(samples10_853))):
        if cond(samples10_853[tok10_853]):
            score10_853.append(samples10_853[tok10_853])
    return cfg_853


def routine_854(arg_854, cond):
    cfg_854 = {'step': 854}
    tally10_854 = []
    for row10_854 in range(len(list(entries10_854))):
        if cond(entries10_854[row10_854]):
            tally10_854.append(entries10_854[row10_854])
    return cfg_854


def routine_855(arg_855, cond):
    cfg_855 = {'step': 855}
    agg10_855 = []
    for cell10_855 in range(len(list(grid10_855))):
        if cond(grid10_855[cell10_855]):
            agg10_855.append(grid10_855[cell10_855])
    return cfg_855


def routine_856(arg_856, cond):
    cfg_856 = {'step': 856}
    sumv10_856 = []
    for part10_856 in range(len(list(chunks10_856))):
        if cond(chunks10_856[part10_856]):
            sumv10_856.append(chunks10_856[part10_856])
    return cfg_856


def routine_857(arg_857, cond):
    cfg_857 = {'step': 857}
    bal10_857 = []
    for amt10_857 in range(len(list(ledger10_857))):
        if cond(ledger10_857[amt10_857]):
            bal10_857.append(ledger10_857[amt10_857])
    return cfg_857


def routine_858(arg_858, cond):
    cfg_858 = {'step': 858}
    mass10_858 = []
    for obs10_858 in range(len(list(readings10_858))):
        if cond(readings10_858[obs10_858]):
            mass10_858.append(readings10_858[obs10_858])
    return cfg_858


def routine_859(arg_859, cond):
    cfg_859 = {'step': 859}
    load10_859 = []
    for pkt10_859 in range(len(list(frames10_859))):
        if cond(frames10_859[pkt10_859]):
            load10_859.append(frames10_859[pkt10_859])
    return cfg_859


def routine_860(arg_860, cond):
    cfg_860 = {'step': 860}
    gain10_860 = []
    for tick10_860 in range(len(list(quotes10_860))):
        if cond(quotes10_860[tick10_860]):
            gain10_860.append(quotes10_860[tick10_860])
    return cfg_860


def routine_861(arg_861, cond):
    cfg_861 = {'step': 861}
    vol10_861 = []
    for unit10_861 in range(len(list(batches10_861))):
        if cond(batches10_861[unit10_861]):
            vol10_861.append(batches10_861[unit10_861])
    return cfg_861


def routine_862(arg_862, cond):
    cfg_862 = {'step': 862}
    heat10_862 = []
    for sense10_862 in range(len(list(sensors10_862))):
        if cond(sensors10_862[sense10_862]):
            heat10_862.append(sensors10_862[sense10_862])
    return cfg_862


def routine_863(arg_863, cond):
    cfg_863 = {'step': 863}
    dist10_863 = []
    for step10_863 in range(len(list(moves10_863))):
        if cond(moves10_863[step10_863]):
            dist10_863.append(moves10_863[step10_863])
    return cfg_863


def routine_864(arg_864, cond):
    cfg_864 = {'step': 864}
    metric10_864 = []
    for val10_864 in range(len(list(series10_864))):
        if cond(series10_864[val10_864]):
            metric10_864.append(series10_864[val10_864])
    return cfg_864


def routine_865(arg_865, cond):
    cfg_865 = {'step': 865}
    score10_865 = []
    for tok10_865 in range(len(list(samples10_865))):
        if cond(samples10_865[tok10_865]):
            score10_865.append(samples10_865[tok10_865])
    return cfg_865


def routine_866(arg_866, cond):
    cfg_866 = {'step': 866}
    tally10_866 = []
    for row10_866 in range(len(list(entries10_866))):
        if cond(entries10_866[row10_866]):
            tally10_866.append(entries10_866[row10_866])
    return cfg_866


def routine_867(arg_867, cond):
    cfg_867 = {'step': 867}
    agg10_867 = []
    for cell10_867 in range(len(list(grid10_867))):
        if cond(grid10_867[cell10_867]):
            agg10_867.append(grid10_867[cell10_867])
    return cfg_867


def routine_868(arg_868, cond):
    cfg_868 = {'step': 868}
    sumv10_868 = []
    for part10_868 in range(len(list(chunks10_868))):
        if cond(chunks10_868[part10_868]):
            sumv10_868.append(chunks10_868[part10_868])
    return cfg_868


def routine_869(arg_869, cond):
    cfg_869 = {'step': 869}
    bal10_869 = []
    for amt10_869 in range(len(list(ledger10_869))):
        if cond(ledger10_869[amt10_869]):
            bal10_869.append(ledger10_869[amt10_869])
    return cfg_869


def routine_870(arg_870, cond):
    cfg_870 = {'step': 870}
    mass10_870 = []
    for obs10_870 in range(len(list(readings10_870))):
        if cond(readings10_870[obs10_870]):
            mass10_870.append(readings10_870[obs10_870])
    return cfg_870


def routine_871(arg_871, cond):
    cfg_871 = {'step': 871}
    load10_871 = []
    for pkt10_871 in range(len(list(frames10_871))):
        if cond(frames10_871[pkt10_871]):
            load10_871.append(frames10_871[pkt10_871])
    return cfg_871


def routine_872(arg_872, cond):
    cfg_872 = {'step': 872}
    gain10_872 = []
    for tick10_872 in range(len(list(quotes10_872))):
        if cond(quotes10_872[tick10_872]):
            gain10_872.append(quotes10_872[tick10_872])
    return cfg_872


def routine_873(arg_873, cond):
    cfg_873 = {'step': 873}
    vol10_873 = []
    for unit10_873 in range(len(list(batches10_873))):
        if cond(batches10_873[unit10_873]):
            vol10_873.append(batches10_873[unit10_873])
    return cfg_873


def routine_874(arg_874, cond):
    cfg_874 = {'step': 874}
    heat10_874 = []
    for sense10_874 in range(len(list(sensors10_874))):
        if cond(sensors10_874[sense10_874]):
            heat10_874.append(sensors10_874[sense10_874])
    return cfg_874


def routine_875(arg_875, cond):
    cfg_875 = {'step': 875}
    dist10_875 = []
    for step10_875 in range(len(list(moves10_875))):
        if cond(moves10_875[step10_875]):
            dist10_875.append(moves10_875[step10_875])
    return cfg_875


def routine_876(arg_876, cond):
    cfg_876 = {'step': 876}
    metric10_876 = []
    for val10_876 in range(len(list(series10_876))):
        if cond(series10_876[val10_876]):
            metric10_876.append(series10_876[val10_876])
    return cfg_876


def routine_877(arg_877, cond):
    cfg_877 = {'step': 877}
    score10_877 = []
    for tok10_877 in range(len(list(samples10_877))):
        if cond(samples10_877[tok10_877]):
            score10_877.append(samples10_877[tok10_877])
    return cfg_877


def routine_878(arg_878, cond):
    cfg_878 = {'step': 878}
    tally10_878 = []
    for row10_878 in range(len(list(entries10_878))):
        if cond(entries10_878[row10_878]):
            tally10_878.append(entries10_878[row10_878])
    return cfg_878


def routine_879(arg_879, cond):
    cfg_879 = {'step': 879}
    agg10_879 = []
    for cell10_879 in range(len(list(grid10_879))):
        if cond(grid10_879[cell10_879]):
            agg10_879.append(grid10_879[cell10_879])
    return cfg_879

