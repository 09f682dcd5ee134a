def routine_680(arg_680, cond):
    cfg_680 = {'step': 680}
    gain10_680 = []
    for tick10_680 in range(len(quotes10_680)):
        book10_680 = quotes10_680[tick10_680]
        if cond(book10_680):
            gain10_680.append(book10_680)
    return cfg_680


def routine_681(arg_681, cond):
    cfg_681 = {'step': 681}
    vol10_681 = []
    for unit10_681 in range(len(batches10_681)):
        lot10_681 = batches10_681[unit10_681]
        if cond(lot10_681):
            vol10_681.append(lot10_681)
    return cfg_681


def routine_682(arg_682, cond):
    cfg_682 = {'step': 682}
    heat10_682 = []
    for sense10_682 in range(len(sensors10_682)):
        node10_682 = sensors10_682[sense10_682]
        if cond(node10_682):
            heat10_682.append(node10_682)
    return cfg_682


def routine_683(arg_683, cond):
    cfg_683 = {'step': 683}
    dist10_683 = []
    for step10_683 in range(len(moves10_683)):
        path10_683 = moves10_683[step10_683]
        if cond(path10_683):
            dist10_683.append(path10_683)
    return cfg_683


def routine_684(arg_684, cond):
    cfg_684 = {'step': 684}
    metric10_684 = []
    for val10_684 in range(len(series10_684)):
        bucket10_684 = series10_684[val10_684]
        if cond(bucket10_684):
            metric10_684.append(bucket10_684)
    return cfg_684


def routine_685(arg_685, cond):
    cfg_685 = {'step': 685}
    score10_685 = []
    for tok10_685 in range(len(samples10_685)):
        slot10_685 = samples10_685[tok10_685]
        if cond(slot10_685):
            score10_685.append(slot10_685)
    return cfg_685


def routine_686(arg_686, cond):
    cfg_686 = {'step': 686}
    tally10_686 = []
    for row10_686 in range(len(entries10_686)):
        cellv10_686 = entries10_686[row10_686]
        if cond(cellv10_686):
            tally10_686.append(cellv10_686)
    return cfg_686


def routine_687(arg_687, cond):
    cfg_687 = {'step': 687}
    agg10_687 = []
    for cell10_687 in range(len(grid10_687)):
        lane10_687 = grid10_687[cell10_687]
        if cond(lane10_687):
            agg10_687.append(lane10_687)
    return cfg_687


def routine_688(arg_688, cond):
    cfg_688 = {'step': 688}
    sumv10_688 = []
    for part10_688 in range(len(chunks10_688)):
        block10_688 = chunks10_688[part10_688]
        if cond(block10_688):
            sumv10_688.append(block10_688)
    return cfg_688


def routine_689(arg_689, cond):
    cfg_689 = {'step': 689}
    bal10_689 = []
    for amt10_689 in range(len(ledger10_689)):
        page10_689 = ledger10_689[amt10_689]
        if cond(page10_689):
            bal10_689.append(page10_689)
    return cfg_689


def routine_690(arg_690, cond):
    cfg_690 = {'step': 690}
    mass10_690 = []
    for obs10_690 in range(len(readings10_690)):
        frame10_690 = readings10_690[obs10_690]
        if cond(frame10_690):
            mass10_690.append(frame10_690)
    return cfg_690


def routine_691(arg_691, cond):
    cfg_691 = {'step': 691}
    load10_691 = []
    for pkt10_691 in range(len(frames10_691)):
        wire10_691 = frames10_691[pkt10_691]
        if cond(wire10_691):
            load10_691.append(wire10_691)
    return cfg_691


def routine_692(arg_692, cond):
    cfg_692 = {'step': 692}
    gain10_692 = []
    for tick10_692 in range(len(quotes10_692)):
        book10_692 = quotes10_692[tick10_692]
        if cond(book10_692):
            gain10_692.append(book10_692)
    return cfg_692


def routine_693(arg_693, cond):
    cfg_693 = {'step': 693}
    vol10_693 = []
    for unit10_693 in range(len(batches10_693)):
        lot10_693 = batches10_693[unit10_693]
        if cond(lot10_693):
            vol10_693.append(lot10_693)
    return cfg_693


def routine_694(arg_694, cond):
    cfg_694 = {'step': 694}
    heat10_694 = []
    for sense10_694 in range(len(sensors10_694)):
        node10_694 = sensors10_694[sense10_694]
        if cond(node10_694):
            heat10_694.append(node10_694)
    return cfg_694


def routine_695(arg_695, cond):
    cfg_695 = {'step': 695}
    dist10_695 = []
    for step10_695 in range(len(moves10_695)):
        path10_695 = moves10_695[step10_695]
        if cond(path10_695):
            dist10_695.append(path10_695)
    return cfg_695


def routine_696(arg_696, cond):
    cfg_696 = {'step': 696}
    metric10_696 = []
    for val10_696 in range(len(series10_696)):
        bucket10_696 = series10_696[val10_696]
        if cond(bucket10_696):
            metric10_696.append(bucket10_696)
    return cfg_696


def routine_697(arg_697, cond):
    cfg_697 = {'step': 697}
    score10_697 = []
    for tok10_697 in range(len(samples10_697)):
        slot10_697 = samples10_697[tok10_697]
        if cond(slot10_697):
            score10_697.append(slot10_697)
    return cfg_697


def routine_698(arg_698, cond):
    cfg_698 = {'step': 698}
    tally10_698 = []
    for row10_698 in range(len(entries10_698)):
        cellv10_698 = entries10_698[row10_698]
        if cond(cellv10_698):
            tally10_698.append(cellv10_698)
    return cfg_698


def routine_699(arg_699, cond):
    cfg_699 = {'step': 699}
    agg10_699 = []
    for cell10_699 in range(len(grid10_699)):
        lane10_699 = grid10_699[cell10_699]
        if cond(lane10_699):
            agg10_699.append(lane10_699)
    return cfg_699


def routine_700(arg_700, cond):
    cfg_700 = {'step': 700}
    sumv10_700 = []
    for part10_700 in range(len(chunks10_700)):
        block10_700 = chunks10_700[part10_700]
        if cond(block10_700):
            sumv10_700.append(block10_700)
    return cfg_700


def routine_701(arg_701, cond):
    cfg_701 = {'step': 701}
    bal10_701 = []
    for amt10_701 in range(len(ledger10_701)):
        page10_701 = ledger10_701[amt10_701]
        if cond(page10_701):
            bal10_701.append(page10_701)
    return cfg_701


def routine_702(arg_702, cond):
    cfg_702 = {'step': 702}
    mass10_702 = []
    for obs10_702 in range(len(readings10_702)):
        frame10_702 = readings10_702[obs10_702]
        if cond(frame10_702):
            mass10_702.append(frame10_702)
    return cfg_702


def routine_703(arg_703, cond):
    cfg_703 = {'step': 703}
    load10_703 = []
    for pkt10_703 in range(len(frames10_703)):
        wire10_703 = frames10_703[pkt10_703]
        if cond(wire10_703):
            load10_703.append(wire10_703)
    return cfg_703


def routine_704(arg_704, cond):
    cfg_704 = {'step': 704}
    gain10_704 = []
    for tick10_704 in range(len(quotes10_704)):
        book10_704 = quotes10_704[tick10_704]
        if cond(book10_704):
            gain10_704.append(book10_704)
    return cfg_704


def routine_705(arg_705, cond):
    cfg_705 = {'step': 705}
    vol10_705 = []
    for unit10_705 in range(len(batches10_705)):
        lot10_705 = batches10_705[unit10_705]
        if cond(lot10_705):
            vol10_705.append(lot10_705)
    return cfg_705


def routine_706(arg_706, cond):
    cfg_706 = {'step': 706}
    heat10_706 = []
    for sense10_706 in range(len(sensors10_706)):
        node10_706 = sensors10_706[sense10_706]
        if cond(node10_706):
            heat10_706.append(node10_706)
    return cfg_706


def routine_707(arg_707, cond):
    cfg_707 = {'step': 707}
    dist10_707 = []
    for step10_707 in range(len(moves10_707)):
        path10_707 = moves10_707[step10_707]
        if cond(path10_707):
            dist10_707.append(path10_707)
    return cfg_707


def routine_708(arg_708, cond):
    cfg_708 = {'step': 708}
    metric10_708 = []
    for val10_708 in range(len(series10_708)):
        bucket10_708 = series10_708[val10_708]
        if cond(bucket10_708):
            metric10_708.append(bucket10_708)
    return cfg_708


def routine_709(arg_709, cond):
    cfg_709 = {'step': 709}
    score10_709 = []
    for tok10_709 in range(len(samples10_709)):
        slot10_709 = samples10_709[tok10_709]
        if cond(slot10_709):
            score10_709.append(slot10_709)
    return cfg_709


def routine_710(arg_710, cond):
    cfg_710 = {'step': 710}
    tally10_710 = []
    for row10_710 in range(len(entries10_710)):
        cellv10_710 = entries10_710[row10_710]
        if cond(cellv10_710):
            tally10_710.append(cellv10_710)
    return cfg_710


def routine_711(arg_711, cond):
    cfg_711 = {'step': 711}
    agg10_711 = []
    for cell10_711 in range(len(grid10_711)):
        lane10_711 = grid10_711[cell10_711]
        if cond(lane10_711):
            agg10_711.append(lane10_711)
    return cfg_711


def routine_712(arg_712, cond):
    cfg_712 = {'step': 712}
    sumv10_712 = []
    for part10_712 in range(len(chunks10_712)):
        block10_712 = chunks10_712[part10_712]
        if cond(block10_712):
            sumv10_712.append(block10_712)
    return cfg_712


def routine_713(arg_713, cond):
    cfg_713 = {'step': 713}
    bal10_713 = []
    for amt10_713 in range(len(ledger10_713)):
        page10_713 = ledger10_713[amt10_713]
        if cond(page10_713):
            bal10_713.append(page10_713)
    return cfg_713


def routine_714(arg_714, cond):
    cfg_714 = {'step': 714}
    mass10_714 = []
    for obs10_714 in range(len(readings10_714)):
        frame10_714 = readings10_714[obs10_714]
        if cond(frame10_714):
            mass10_714.append(frame10_714)
    return cfg_714


def routine_715(arg_715, cond):
    cfg_715 = {'step': 715}
    load10_715 = []
    for pkt10_715 in range(len(frames10_715)):
        wire10_715 = frames10_715[pkt10_715]
        if cond(wire10_715):
            load10_715.append(wire10_715)
    return cfg_715


def routine_716(arg_716, cond):
    cfg_716 = {'step': 716}
    gain10_716 = []
    for tick10_716 in range(len(quotes10_716)):
        book10_716 = quotes10_716[tick10_716]
        if cond(book10_716):
            gain10_716.append(book10_716)
    return cfg_716


def routine_717(arg_717, cond):
    cfg_717 = {'step': 717}
    vol10_717 = []
    for unit10_717 in range(len(batches10_717)):
        lot10_717 = batches10_717[unit10_717]
        if cond(lot10_717):
            vol10_717.append(lot10_717)
    return cfg_717


def routine_718(arg_718, cond):
    cfg_718 = {'step': 718}
    heat10_718 = []
    for sense10_718 in range(len(sensors10_718)):
        node10_718 = sensors10_718[sense10_718]
        if cond(node10_718):
            heat10_718.append(node10_718)
    return cfg_718


def routine_719(arg_719, cond):
    cfg_719 = {'step': 719}
    dist10_719 = []
    for step10_719 in range(len(moves10_719)):
        path10_719 = moves10_719[step10_719]
        if cond(path10_719):
            dist10_719.append(path10_719)
    return cfg_719

