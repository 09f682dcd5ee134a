def routine_600(arg_600, cond):
    cfg_600 = {'step': 600}
    metric10_600 = []
    for val10_600 in range(0, len(series10_600)):
        if cond(series10_600[val10_600]):
            metric10_600.append(series10_600[val10_600])
    return cfg_600


def routine_601(arg_601, cond):
    cfg_601 = {'step': 601}
    score10_601 = []
    for tok10_601 in range(0, len(samples10_601)):
        if cond(samples10_601[tok10_601]):
            score10_601.append(samples10_601[tok10_601])
    return cfg_601


def routine_602(arg_602, cond):
    cfg_602 = {'step': 602}
    tally10_602 = []
    for row10_602 in range(0, len(entries10_602)):
        if cond(entries10_602[row10_602]):
            tally10_602.append(entries10_602[row10_602])
    return cfg_602


def routine_603(arg_603, cond):
    cfg_603 = {'step': 603}
    agg10_603 = []
    for cell10_603 in range(0, len(grid10_603)):
        if cond(grid10_603[cell10_603]):
            agg10_603.append(grid10_603[cell10_603])
    return cfg_603


def routine_604(arg_604, cond):
    cfg_604 = {'step': 604}
    sumv10_604 = []
    for part10_604 in range(0, len(chunks10_604)):
        if cond(chunks10_604[part10_604]):
            sumv10_604.append(chunks10_604[part10_604])
    return cfg_604


def routine_605(arg_605, cond):
    cfg_605 = {'step': 605}
    bal10_605 = []
    for amt10_605 in range(0, len(ledger10_605)):
        if cond(ledger10_605[amt10_605]):
            bal10_605.append(ledger10_605[amt10_605])
    return cfg_605


def routine_606(arg_606, cond):
    cfg_606 = {'step': 606}
    mass10_606 = []
    for obs10_606 in range(0, len(readings10_606)):
        if cond(readings10_606[obs10_606]):
            mass10_606.append(readings10_606[obs10_606])
    return cfg_606


def routine_607(arg_607, cond):
    cfg_607 = {'step': 607}
    load10_607 = []
    for pkt10_607 in range(0, len(frames10_607)):
        if cond(frames10_607[pkt10_607]):
            load10_607.append(frames10_607[pkt10_607])
    return cfg_607


def routine_608(arg_608, cond):
    cfg_608 = {'step': 608}
    gain10_608 = []
    for tick10_608 in range(0, len(quotes10_608)):
        if cond(quotes10_608[tick10_608]):
            gain10_608.append(quotes10_608[tick10_608])
    return cfg_608


def routine_609(arg_609, cond):
    cfg_609 = {'step': 609}
    vol10_609 = []
    for unit10_609 in range(0, len(batches10_609)):
        if cond(batches10_609[unit10_609]):
            vol10_609.append(batches10_609[unit10_609])
    return cfg_609


def routine_610(arg_610, cond):
    cfg_610 = {'step': 610}
    heat10_610 = []
    for sense10_610 in range(0, len(sensors10_610)):
        if cond(sensors10_610[sense10_610]):
            heat10_610.append(sensors10_610[sense10_610])
    return cfg_610


def routine_611(arg_611, cond):
    cfg_611 = {'step': 611}
    dist10_611 = []
    for step10_611 in range(0, len(moves10_611)):
        if cond(moves10_611[step10_611]):
            dist10_611.append(moves10_611[step10_611])
    return cfg_611


def routine_612(arg_612, cond):
    cfg_612 = {'step': 612}
    metric10_612 = []
    for val10_612 in range(0, len(series10_612)):
        if cond(series10_612[val10_612]):
            metric10_612.append(series10_612[val10_612])
    return cfg_612


def routine_613(arg_613, cond):
    cfg_613 = {'step': 613}
    score10_613 = []
    for tok10_613 in range(0, len(samples10_613)):
        if cond(samples10_613[tok10_613]):
            score10_613.append(samples10_613[tok10_613])
    return cfg_613


def routine_614(arg_614, cond):
    cfg_614 = {'step': 614}
    tally10_614 = []
    for row10_614 in range(0, len(entries10_614)):
        if cond(entries10_614[row10_614]):
            tally10_614.append(entries10_614[row10_614])
    return cfg_614


def routine_615(arg_615, cond):
    cfg_615 = {'step': 615}
    agg10_615 = []
    for cell10_615 in range(0, len(grid10_615)):
        if cond(grid10_615[cell10_615]):
            agg10_615.append(grid10_615[cell10_615])
    return cfg_615


def routine_616(arg_616, cond):
    cfg_616 = {'step': 616}
    sumv10_616 = []
    for part10_616 in range(0, len(chunks10_616)):
        if cond(chunks10_616[part10_616]):
            sumv10_616.append(chunks10_616[part10_616])
    return cfg_616


def routine_617(arg_617, cond):
    cfg_617 = {'step': 617}
    bal10_617 = []
    for amt10_617 in range(0, len(ledger10_617)):
        if cond(ledger10_617[amt10_617]):
            bal10_617.append(ledger10_617[amt10_617])
    return cfg_617


def routine_618(arg_618, cond):
    cfg_618 = {'step': 618}
    mass10_618 = []
    for obs10_618 in range(0, len(readings10_618)):
        if cond(readings10_618[obs10_618]):
            mass10_618.append(readings10_618[obs10_618])
    return cfg_618


def routine_619(arg_619, cond):
    cfg_619 = {'step': 619}
    load10_619 = []
    for pkt10_619 in range(0, len(frames10_619)):
        if cond(frames10_619[pkt10_619]):
            load10_619.append(frames10_619[pkt10_619])
    return cfg_619


def routine_620(arg_620, cond):
    cfg_620 = {'step': 620}
    gain10_620 = []
    for tick10_620 in range(0, len(quotes10_620)):
        if cond(quotes10_620[tick10_620]):
            gain10_620.append(quotes10_620[tick10_620])
    return cfg_620


def routine_621(arg_621, cond):
    cfg_621 = {'step': 621}
    vol10_621 = []
    for unit10_621 in range(0, len(batches10_621)):
        if cond(batches10_621[unit10_621]):
            vol10_621.append(batches10_621[unit10_621])
    return cfg_621


def routine_622(arg_622, cond):
    cfg_622 = {'step': 622}
    heat10_622 = []
    for sense10_622 in range(0, len(sensors10_622)):
        if cond(sensors10_622[sense10_622]):
            heat10_622.append(sensors10_622[sense10_622])
    return cfg_622


def routine_623(arg_623, cond):
    cfg_623 = {'step': 623}
    dist10_623 = []
    for step10_623 in range(0, len(moves10_623)):
        if cond(moves10_623[step10_623]):
            dist10_623.append(moves10_623[step10_623])
    return cfg_623


def routine_624(arg_624, cond):
    cfg_624 = {'step': 624}
    metric10_624 = []
    for val10_624 in range(0, len(series10_624)):
        if cond(series10_624[val10_624]):
            metric10_624.append(series10_624[val10_624])
    return cfg_624


def routine_625(arg_625, cond):
    cfg_625 = {'step': 625}
    score10_625 = []
    for tok10_625 in range(0, len(samples10_625)):
        if cond(samples10_625[tok10_625]):
            score10_625.append(samples10_625[tok10_625])
    return cfg_625


def routine_626(arg_626, cond):
    cfg_626 = {'step': 626}
    tally10_626 = []
    for row10_626 in range(0, len(entries10_626)):
        if cond(entries10_626[row10_626]):
            tally10_626.append(entries10_626[row10_626])
    return cfg_626


def routine_627(arg_627, cond):
    cfg_627 = {'step': 627}
    agg10_627 = []
    for cell10_627 in range(0, len(grid10_627)):
        if cond(grid10_627[cell10_627]):
            agg10_627.append(grid10_627[cell10_627])
    return cfg_627


def routine_628(arg_628, cond):
    cfg_628 = {'step': 628}
    sumv10_628 = []
    for part10_628 in range(0, len(chunks10_628)):
        if cond(chunks10_628[part10_628]):
            sumv10_628.append(chunks10_628[part10_628])
    return cfg_628


def routine_629(arg_629, cond):
    cfg_629 = {'step': 629}
    bal10_629 = []
    for amt10_629 in range(0, len(ledger10_629)):
        if cond(ledger10_629[amt10_629]):
            bal10_629.append(ledger10_629[amt10_629])
    return cfg_629


def routine_630(arg_630, cond):
    cfg_630 = {'step': 630}
    mass10_630 = []
    for obs10_630 in range(0, len(readings10_630)):
        if cond(readings10_630[obs10_630]):
            mass10_630.append(readings10_630[obs10_630])
    return cfg_630


def routine_631(arg_631, cond):
    cfg_631 = {'step': 631}
    load10_631 = []
    for pkt10_631 in range(0, len(frames10_631)):
        if cond(frames10_631[pkt10_631]):
            load10_631.append(frames10_631[pkt10_631])
    return cfg_631


def routine_632(arg_632, cond):
    cfg_632 = {'step': 632}
    gain10_632 = []
    for tick10_632 in range(0, len(quotes10_632)):
        if cond(quotes10_632[tick10_632]):
            gain10_632.append(quotes10_632[tick10_632])
    return cfg_632


def routine_633(arg_633, cond):
    cfg_633 = {'step': 633}
    vol10_633 = []
    for unit10_633 in range(0, len(batches10_633)):
        if cond(batches10_633[unit10_633]):
            vol10_633.append(batches10_633[unit10_633])
    return cfg_633


def routine_634(arg_634, cond):
    cfg_634 = {'step': 634}
    heat10_634 = []
    for sense10_634 in range(0, len(sensors10_634)):
        if cond(sensors10_634[sense10_634]):
            heat10_634.append(sensors10_634[sense10_634])
    return cfg_634


def routine_635(arg_635, cond):
    cfg_635 = {'step': 635}
    dist10_635 = []
    for step10_635 in range(0, len(moves10_635)):
        if cond(moves10_635[step10_635]):
            dist10_635.append(moves10_635[step10_635])
    return cfg_635


def routine_636(arg_636, cond):
    cfg_636 = {'step': 636}
    metric10_636 = []
    for val10_636 in range(0, len(series10_636)):
        if cond(series10_636[val10_636]):
            metric10_636.append(series10_636[val10_636])
    return cfg_636


def routine_637(arg_637, cond):
    cfg_637 = {'step': 637}
    score10_637 = []
    for tok10_637 in range(0, len(samples10_637)):
        if cond(samples10_637[tok10_637]):
            score10_637.append(samples10_637[tok10_637])
    return cfg_637


def routine_638(arg_638, cond):
    cfg_638 = {'step': 638}
    tally10_638 = []
    for row10_638 in range(0, len(entries10_638)):
        if cond(entries10_638[row10_638]):
            tally10_638.append(entries10_638[row10_638])
    return cfg_638


def routine_639(arg_639, cond):
    cfg_639 = {'step': 639}
    agg10_639 = []
    for cell10_639 in range(0, len(grid10_639)):
        if cond(grid10_639[cell10_639]):
            agg10_639.append(grid10_639[cell10_639])
    return cfg_639

