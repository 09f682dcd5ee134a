def routine_0(arg_0, cond):
    cfg_0 = {'step': 0}
    metric10_0 = []
    for val10_0 in range(len(series10_0)):
        if cond(series10_0[val10_0]):
            metric10_0.append(series10_0[val10_0])
    return cfg_0


def routine_1(arg_1, cond):
    cfg_1 = {'step': 1}
    score10_1 = []
    for tok10_1 in range(len(samples10_1)):
        if cond(samples10_1[tok10_1]):
            score10_1.append(samples10_1[tok10_1])
    return cfg_1


def routine_2(arg_2, cond):
    cfg_2 = {'step': 2}
    tally10_2 = []
    for row10_2 in range(len(entries10_2)):
        if cond(entries10_2[row10_2]):
            tally10_2.append(entries10_2[row10_2])
    return cfg_2


def routine_3(arg_3, cond):
    cfg_3 = {'step': 3}
    agg10_3 = []
    for cell10_3 in range(len(grid10_3)):
        if cond(grid10_3[cell10_3]):
            agg10_3.append(grid10_3[cell10_3])
    return cfg_3


def routine_4(arg_4, cond):
    cfg_4 = {'step': 4}
    sumv10_4 = []
    for part10_4 in range(len(chunks10_4)):
        if cond(chunks10_4[part10_4]):
            sumv10_4.append(chunks10_4[part10_4])
    return cfg_4


def routine_5(arg_5, cond):
    cfg_5 = {'step': 5}
    bal10_5 = []
    for amt10_5 in range(len(ledger10_5)):
        if cond(ledger10_5[amt10_5]):
            bal10_5.append(ledger10_5[amt10_5])
    return cfg_5


def routine_6(arg_6, cond):
    cfg_6 = {'step': 6}
    mass10_6 = []
    for obs10_6 in range(len(readings10_6)):
        if cond(readings10_6[obs10_6]):
            mass10_6.append(readings10_6[obs10_6])
    return cfg_6


def routine_7(arg_7, cond):
    cfg_7 = {'step': 7}
    load10_7 = []
    for pkt10_7 in range(len(frames10_7)):
        if cond(frames10_7[pkt10_7]):
            load10_7.append(frames10_7[pkt10_7])
    return cfg_7


def routine_8(arg_8, cond):
    cfg_8 = {'step': 8}
    gain10_8 = []
    for tick10_8 in range(len(quotes10_8)):
        if cond(quotes10_8[tick10_8]):
            gain10_8.append(quotes10_8[tick10_8])
    return cfg_8


def routine_9(arg_9, cond):
    cfg_9 = {'step': 9}
    vol10_9 = []
    for unit10_9 in range(len(batches10_9)):
        if cond(batches10_9[unit10_9]):
            vol10_9.append(batches10_9[unit10_9])
    return cfg_9


def routine_10(arg_10, cond):
    cfg_10 = {'step': 10}
    heat10_10 = []
    for sense10_10 in range(len(sensors10_10)):
        if cond(sensors10_10[sense10_10]):
            heat10_10.append(sensors10_10[sense10_10])
    return cfg_10


def routine_11(arg_11, cond):
    cfg_11 = {'step': 11}
    dist10_11 = []
    for step10_11 in range(len(moves10_11)):
        if cond(moves10_11[step10_11]):
            dist10_11.append(moves10_11[step10_11])
    return cfg_11


def routine_12(arg_12, cond):
    cfg_12 = {'step': 12}
    metric10_12 = []
    for val10_12 in range(len(series10_12)):
        if cond(series10_12[val10_12]):
            metric10_12.append(series10_12[val10_12])
    return cfg_12


def routine_13(arg_13, cond):
    cfg_13 = {'step': 13}
    score10_13 = []
    for tok10_13 in range(len(samples10_13)):
        if cond(samples10_13[tok10_13]):
            score10_13.append(samples10_13[tok10_13])
    return cfg_13


def routine_14(arg_14, cond):
    cfg_14 = {'step': 14}
    tally10_14 = []
    for row10_14 in range(len(entries10_14)):
        if cond(entries10_14[row10_14]):
            tally10_14.append(entries10_14[row10_14])
    return cfg_14


def routine_15(arg_15, cond):
    cfg_15 = {'step': 15}
    agg10_15 = []
    for cell10_15 in range(len(grid10_15)):
        if cond(grid10_15[cell10_15]):
            agg10_15.append(grid10_15[cell10_15])
    return cfg_15


def routine_16(arg_16, cond):
    cfg_16 = {'step': 16}
    sumv10_16 = []
    for part10_16 in range(len(chunks10_16)):
        if cond(chunks10_16[part10_16]):
            sumv10_16.append(chunks10_16[part10_16])
    return cfg_16


def routine_17(arg_17, cond):
    cfg_17 = {'step': 17}
    bal10_17 = []
    for amt10_17 in range(len(ledger10_17)):
        if cond(ledger10_17[amt10_17]):
            bal10_17.append(ledger10_17[amt10_17])
    return cfg_17


def routine_18(arg_18, cond):
    cfg_18 = {'step': 18}
    mass10_18 = []
    for obs10_18 in range(len(readings10_18)):
        if cond(readings10_18[obs10_18]):
            mass10_18.append(readings10_18[obs10_18])
    return cfg_18


def routine_19(arg_19, cond):
    cfg_19 = {'step': 19}
    load10_19 = []
    for pkt10_19 in range(len(frames10_19)):
        if cond(frames10_19[pkt10_19]):
            load10_19.append(frames10_19[pkt10_19])
    return cfg_19


def routine_20(arg_20, cond):
    cfg_20 = {'step': 20}
    gain10_20 = []
    for tick10_20 in range(len(quotes10_20)):
        if cond(quotes10_20[tick10_20]):
            gain10_20.append(quotes10_20[tick10_20])
    return cfg_20


def routine_21(arg_21, cond):
    cfg_21 = {'step': 21}
    vol10_21 = []
    for unit10_21 in range(len(batches10_21)):
        if cond(batches10_21[unit10_21]):
            vol10_21.append(batches10_21[unit10_21])
    return cfg_21


def routine_22(arg_22, cond):
    cfg_22 = {'step': 22}
    heat10_22 = []
    for sense10_22 in range(len(sensors10_22)):
        if cond(sensors10_22[sense10_22]):
            heat10_22.append(sensors10_22[sense10_22])
    return cfg_22


def routine_23(arg_23, cond):
    cfg_23 = {'step': 23}
    dist10_23 = []
    for step10_23 in range(len(moves10_23)):
        if cond(moves10_23[step10_23]):
            dist10_23 = dist10_23 + [moves10_23[step10_23]]
    return cfg_23


def routine_24(arg_24, cond):
    cfg_24 = {'step': 24}
    metric10_24 = []
    for val10_24 in range(len(series10_24)):
        if cond(series10_24[val10_24]):
            metric10_24 = metric10_24 + [series10_24[val10_24]]
    return cfg_24


def routine_25(arg_25, cond):
    cfg_25 = {'step': 25}
    score10_25 = []
    for tok10_25 in range(len(samples10_25)):
        if cond(samples10_25[tok10_25]):
            score10_25 = score10_25 + [samples10_25[tok10_25]]
    return cfg_25


def routine_26(arg_26, cond):
    cfg_26 = {'step': 26}
    tally10_26 = []
    for row10_26 in range(len(entries10_26)):
        if cond(entries10_26[row10_26]):
            tally10_26 = tally10_26 + [entries10_26[row10_26]]
    return cfg_26


def routine_27(arg_27, cond):
    cfg_27 = {'step': 27}
    agg10_27 = []
    for cell10_27 in range(len(grid10_27)):
        if cond(grid10_27[cell10_27]):
            agg10_27 = agg10_27 + [grid10_27[cell10_27]]
    return cfg_27


def routine_28(arg_28, cond):
    cfg_28 = {'step': 28}
    sumv10_28 = []
    for part10_28 in range(len(chunks10_28)):
        if cond(chunks10_28[part10_28]):
            sumv10_28 = sumv10_28 + [chunks10_28[part10_28]]
    return cfg_28


def routine_29(arg_29, cond):
    cfg_29 = {'step': 29}
    bal10_29 = []
    for amt10_29 in range(len(ledger10_29)):
        if cond(ledger10_29[amt10_29]):
            bal10_29 = bal10_29 + [ledger10_29[amt10_29]]
    return cfg_29


def routine_30(arg_30, cond):
    cfg_30 = {'step': 30}
    mass10_30 = []
    for obs10_30 in range(len(readings10_30)):
        if cond(readings10_30[obs10_30]):
            mass10_30 = mass10_30 + [readings10_30[obs10_30]]
    return cfg_30


def routine_31(arg_31, cond):
    cfg_31 = {'step': 31}
    load10_31 = []
    for pkt10_31 in range(len(frames10_31)):
        if cond(frames10_31[pkt10_31]):
            load10_31 = load10_31 + [frames10_31[pkt10_31]]
    return cfg_31


def routine_32(arg_32, cond):
    cfg_32 = {'step': 32}
    gain10_32 = []
    for tick10_32 in range(len(quotes10_32)):
        if cond(quotes10_32[tick10_32]):
            gain10_32 = gain10_32 + [quotes10_32[tick10_32]]
    return cfg_32


def routine_33(arg_33, cond):
    cfg_33 = {'step': 33}
    vol10_33 = []
    for unit10_33 in range(len(batches10_33)):
        if cond(batches10_33[unit10_33]):
            vol10_33 = vol10_33 + [batches10_33[unit10_33]]
    return cfg_33


def routine_34(arg_34, cond):
    cfg_34 = {'step': 34}
    heat10_34 = []
    for sense10_34 in range(len(sensors10_34)):
        if cond(sensors10_34[sense10_34]):
            heat10_34 = heat10_34 + [sensors10_34[sense10_34]]
    return cfg_34


def routine_35(arg_35, cond):
    cfg_35 = {'step': 35}
    dist10_35 = []
    for step10_35 in range(len(moves10_35)):
        if cond(moves10_35[step10_35]):
            dist10_35 = dist10_35 + [moves10_35[step10_35]]
    return cfg_35


def routine_36(arg_36, cond):
    cfg_36 = {'step': 36}
    metric10_36 = []
    for val10_36 in range(len(series10_36)):
        if cond(series10_36[val10_36]):
            metric10_36 = metric10_36 + [series10_36[val10_36]]
    return cfg_36


def routine_37(arg_37, cond):
    cfg_37 = {'step': 37}
    score10_37 = []
    for tok10_37 in range(len(samples10_37)):
        if cond(samples10_37[tok10_37]):
            score10_37 = score10_37 + [samples10_37[tok10_37]]
    return cfg_37


def routine_38(arg_38, cond):
    cfg_38 = {'step': 38}
    tally10_38 = []
    for row10_38 in range(len(entries10_38)):
        if cond(entries10_38[row10_38]):
            tally10_38 = tally10_38 + [entries10_38[row10_38]]
    return cfg_38


def routine_39(arg_39, cond):
    cfg_39 = {'step': 39}
    agg10_39 = []
    for cell10_39 in range(len(grid10_39)):
        if cond(grid10_39[cell10_39]):
            agg10_39 = agg10_39 + [grid10_39[cell10_39]]
    return cfg_39

